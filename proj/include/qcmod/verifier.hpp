#pragma once

#include "qcmod/enumerator.hpp"
#include "qcmod/games.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace qcmod {

/// Supplies the approximation level k = T(n,m). It is an assumption slot:
/// constant, a finite table, or an external command invoked as `cmd n m`
/// that prints k on stdout.
class QcModulus {
public:
  enum class Kind { Constant, Table, External };
  using TableMap = std::map<std::pair<int, int>, int>;

  static QcModulus constant(int k);
  static QcModulus table(TableMap entries);
  static QcModulus external(std::string command);

  Kind kind() const { return kind_; }
  int constant_value() const { return constant_; }
  const TableMap &entries() const { return table_; }
  const std::string &command() const { return command_; }

  /// Throws ModulusError if T is undefined at params or returns k < 1.
  int operator()(const GroupParams &params) const;

  friend bool operator==(const QcModulus &, const QcModulus &) = default;

private:
  Kind kind_ = Kind::Constant;
  int constant_ = 1;
  TableMap table_;
  std::string command_;
};

struct GameFamily {
  std::string name;
  std::function<NonlocalGame(const std::string &)> generate;
};

/// z over {0,1}, non-empty: last bit 1 gives mirror(2,2), otherwise antimirror(2,2).
GameFamily toy_family();
/// Throws InputError for unknown names.
GameFamily family_by_name(const std::string &name);

struct VerdictCertificate {
  int schema_version = 1;
  std::string z;
  std::string family;
  QcModulus modulus;
  GroupParams params;
  int k = 1;
  Integer index;
  Correlation p;
  PartialTrace tau;
  Rational value;
};

struct VerifyProgress {
  std::string z;
  std::string family;
  QcModulus modulus;
  GroupParams params;
  int k = 1;
  Integer next_index; // resume here
  std::uint64_t examined = 0;
};

using VerifyOutcome = std::variant<VerdictCertificate, VerifyProgress>;

inline bool accepted(const VerifyOutcome &o) { return std::holds_alternative<VerdictCertificate>(o); }

/// Scans candidates [from, from+budget) and accepts at the first one whose
/// exact game value exceeds 1/2.
VerifyOutcome verify(const std::string &z, const GameFamily &family, const QcModulus &modulus,
                     std::uint64_t budget, const Integer &from = 0);

/// Replays a certificate offline. Never throws.
bool recheck_certificate(const VerdictCertificate &cert, const GameFamily &family);

struct ProbeResult {
  Rational distance;
  std::vector<std::pair<AnswerFunction, Rational>> combination; // nonzero weights
};

/// Upper bound on the max-norm distance from p to the synchronous classical
/// hull, using convex combinations of at most `depth` deterministic
/// correlations. Throws ParameterError when depth < 1 or the search is too large.
ProbeResult stability_probe(const Correlation &p, int depth);

} // namespace qcmod
