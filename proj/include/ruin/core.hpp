#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ruin {

//---------------------------------------------------------------------------//
// Errors
//---------------------------------------------------------------------------//

//! Invalid user-supplied parameters (p, s, i0, z, kmax, ...).
class ParameterError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! The requested quantity has no closed form in this regime.
class UnsupportedRegime : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Absorption is not almost sure, so the unconditional mean time diverges.
class NotAlmostSure : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Internal numerical inconsistency (complex roots, failed convergence).
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
// Domain types
//---------------------------------------------------------------------------//

enum class Strategy
{
    A,  //!< mfb's at k*i0 (k >= 1), active from t = 0
    B,  //!< as A, but i0 is a normal state at t = 0
    C,  //!< mfb's at k*i0 (k >= 2) only
};

char to_char(Strategy s);
Strategy parse_strategy(std::string_view text);

struct WalkParams
{
    double p{0.5};
    double s{0.5};
    int i0{1};

    double q() const { return 1.0 - p; }
    double omega() const { return p / q(); }
};

//! Classification of the stop probability.
enum class StopRegime
{
    Never,      //!< s = 0: no mfb's, plain ruin problem
    Sometimes,  //!< 0 < s < 1
    Always,     //!< s = 1: mfb's are absorbing
};

/*!
 * A validated problem instance.
 *
 * The symmetric flag is set only when p is exactly 1/2; nearby values take
 * the generic branches.
 */
struct Instance
{
    WalkParams params;
    Strategy strategy{Strategy::B};
    bool symmetric{false};
    StopRegime regime{StopRegime::Sometimes};

    double p() const { return params.p; }
    double q() const { return params.q(); }
    double s() const { return params.s; }
    int i0() const { return params.i0; }
    double omega() const { return params.omega(); }
};

Instance validate(WalkParams const& params, Strategy strategy);

//! A lattice position with its barrier decomposition position = k*i0 + n.
class LatticeState
{
  public:
    LatticeState(std::int64_t position, int i0);

    std::int64_t position() const { return position_; }
    std::int64_t segment() const { return position_ / i0_; }
    int offset() const { return static_cast<int>(position_ % i0_); }
    bool on_barrier() const { return offset() == 0; }

  private:
    std::int64_t position_;
    int i0_;
};

//! True if position k*i0 is an mfb for the strategy (ignoring t = 0 rules).
bool is_mfb(Strategy strategy, std::int64_t k);

//! Probability of stopping on an arrival at the state at the given time.
double stop_probability(Instance const& inst,
                        LatticeState const& state,
                        std::int64_t time);

//! Stop probability at a raw position; convenience for the oracles.
double stop_probability(Instance const& inst,
                        std::int64_t position,
                        std::int64_t time);

std::string describe(StopRegime regime);

}  // namespace ruin
