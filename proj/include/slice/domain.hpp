#ifndef SLICE_DOMAIN_HPP
#define SLICE_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slice {

struct InvalidInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivergentMomentError : std::domain_error {
    using std::domain_error::domain_error;
};
struct AccuracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exponent in [1, inf]. Infinity is a distinguished tag, not a float sentinel.
class Exponent {
  public:
    static Exponent finite(double v);
    static Exponent infinity();
    /// Accepts a decimal literal or the token "inf".
    static Exponent parse(std::string_view text);

    bool is_infinite() const { return infinite_; }
    /// Finite value; throws for the infinite tag.
    double value() const;
    /// 1/p, with 0 for p = inf. Safe for any exponent.
    double inverse() const { return infinite_ ? 0.0 : 1.0 / value_; }
    /// Conjugate exponent: dual(1) = inf, dual(q) = q/(q-1). An involution.
    Exponent dual() const;

    bool operator==(const Exponent& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    std::string str() const;

  private:
    Exponent(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_ = 2.0;
    bool infinite_ = false;
};

/// Unit vector with nonnegative coordinates sorted in descending order.
/// The constructor canonicalizes: absolute values, sort, normalize.
/// Every functional in this library is invariant under signs and
/// permutations, so the canonical representative loses nothing.
class Direction {
  public:
    explicit Direction(std::vector<double> raw);

    std::span<const double> coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    /// Number of coordinates above the support cutoff (1e-15).
    std::size_t support_size() const;

    /// l_p norm of the coordinates (p may be infinite).
    double norm(const Exponent& p) const;

    bool operator==(const Direction& o) const { return coords_ == o.coords_; }

  private:
    std::vector<double> coords_;
};

Direction canonicalize(std::vector<double> raw);

/// Squared distance to the extremal direction (e1+e2)/sqrt(2),
/// evaluated as 2 - sqrt(2)(a1 + a2); a2 := 0 when n = 1.
/// Clamped to [0, 2] against rounding.
double deficit(const Direction& a);

struct MCEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Heavy-tail diagnostic: set when the empirical kurtosis of the
    /// per-sample values looks non-finite. Never expected for the
    /// estimators in this library; treated as a bug signal.
    bool heavy_tail_flag = false;
};

struct StabilityReport {
    Direction direction;
    double deficit = 0.0;
    double functional_value = 0.0;
    double bound = 0.0;
    /// Difference on the guaranteed side of the inequality
    /// (positive = the robust bound holds with room to spare).
    double margin = 0.0;
    /// Standard error of functional_value when it came from Monte Carlo;
    /// zero on deterministic paths. A negative margin within six standard
    /// errors is sampling noise, not a violation; beyond that it must be
    /// reported, never dismissed.
    double value_std_error = 0.0;
};

enum class LemmaId {
    PMeansDeficit,
    NearPairGap,
    RadialL2Bound,
    SignCouplingL2,
    EquicontinuitySection,
    EquicontinuityProjection,
    SectionCoreBound,
    ProjectionCoreBound,
    CpSandwich,
    CqSandwich,
};

std::string lemma_id_name(LemmaId id);

enum class VerdictStatus { Pass, Fail, Inconclusive };

std::string verdict_status_name(VerdictStatus s);

struct LemmaVerdict {
    LemmaId id;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    VerdictStatus status = VerdictStatus::Pass;
    double slack = 0.0;

    bool pass() const { return status == VerdictStatus::Pass; }
};

}  // namespace slice

#endif
