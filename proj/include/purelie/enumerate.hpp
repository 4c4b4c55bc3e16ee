#pragma once

#include "purelie/purity.hpp"

#include <map>
#include <optional>

namespace purelie {

enum class Verdict { Cofree, Impure, Unstable, NeedsRefinedAnalysis, Unlisted };
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

// How an entry's impurity was (or was not) re-derived.
struct Certificate {
  enum class Kind { NotAttempted, Toral, Hyperplane, NeedsRefinedAnalysis } kind = Kind::NotAttempted;
  std::int64_t order = 0;  // for Toral
  std::string describe() const;
};

struct SmallEnoughEntry {
  Weight lambda;  // canonical under outer symmetries
  BigInt dim;
  std::size_t support = 0;
  std::int64_t width = 0;
  Verdict verdict = Verdict::Unlisted;
  std::string reference_tag;  // source column of the matching reference row
  Certificate certificate;
};

struct ReferenceRow {
  Family family;
  int n_lo = 0, n_hi = 0;  // n_hi < 0: unbounded
  enum class Parity { Any, Even, Odd } parity = Parity::Any;
  int k_lo = 0, k_hi = 0;  // both 0 when the row has no k
  std::string weights;
  Verdict verdict = Verdict::Unlisted;
  std::string source;
  int line = 0;
};

class ReferenceVerdicts {
 public:
  static ReferenceVerdicts parse(const std::string& text);
  static ReferenceVerdicts load(const std::string& path);
  // data/reference_verdicts.txt of the source tree, or $PURELIE_DATA_DIR.
  static ReferenceVerdicts load_default();

  const std::vector<ReferenceRow>& rows() const { return rows_; }

  struct Match {
    Verdict verdict;
    std::string source;
  };
  // Canonical weights listed for this root system. Throws if two rows disagree.
  std::map<Weight, Match> for_type(const RootSystem& rs) const;

 private:
  std::vector<ReferenceRow> rows_;
};

// All dominant lambda != 0 with weyl_dim <= kappa, canonicalized, sorted by (dim, lambda).
std::vector<SmallEnoughEntry> enumerate_small_enough(const RootSystem& rs);

struct CertifyOptions {
  std::uint64_t toral_cap = kDefaultToralCap;
  std::uint64_t hyperplane_cap = kDefaultHyperplaneCap;
};

// Labels entries from the reference data. Entries missing from it are marked
// Unlisted, or rejected with InvalidInput when `strict` is set.
std::vector<SmallEnoughEntry> attach_verdicts(const RootSystem& rs, std::vector<SmallEnoughEntry> entries,
                                              const ReferenceVerdicts& refs, bool certify, bool strict = false,
                                              const CertifyOptions& options = {});

// Toral order 2, then order 3, then the hyperplane count.
Certificate certify_impurity(const RootSystem& rs, const Weight& lambda, const CertifyOptions& options = {});

Weight shift(const Weight& w, std::size_t i, std::size_t j);

}  // namespace purelie
