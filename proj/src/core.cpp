#include "ruin/core.hpp"

#include <cmath>

namespace ruin {

char to_char(Strategy s)
{
    switch (s)
    {
        case Strategy::A:
            return 'A';
        case Strategy::B:
            return 'B';
        case Strategy::C:
            return 'C';
    }
    return '?';
}

Strategy parse_strategy(std::string_view text)
{
    if (text == "A" || text == "a")
        return Strategy::A;
    if (text == "B" || text == "b")
        return Strategy::B;
    if (text == "C" || text == "c")
        return Strategy::C;
    throw ParameterError("unknown strategy '" + std::string(text)
                         + "' (expected A, B or C)");
}

Instance validate(WalkParams const& params, Strategy strategy)
{
    if (!(params.p > 0.0 && params.p < 1.0))
        throw ParameterError("p must lie in (0, 1), got "
                             + std::to_string(params.p));
    if (!(params.s >= 0.0 && params.s <= 1.0))
        throw ParameterError("s must lie in [0, 1], got "
                             + std::to_string(params.s));
    if (params.i0 < 1)
        throw ParameterError("i0 must be a positive integer, got "
                             + std::to_string(params.i0));

    Instance inst;
    inst.params = params;
    inst.strategy = strategy;
    inst.symmetric = (params.p == 0.5);
    if (params.s == 0.0)
        inst.regime = StopRegime::Never;
    else if (params.s == 1.0)
        inst.regime = StopRegime::Always;
    else
        inst.regime = StopRegime::Sometimes;
    return inst;
}

LatticeState::LatticeState(std::int64_t position, int i0)
    : position_{position}, i0_{i0}
{
    if (position < 0)
        throw ParameterError("lattice position must be non-negative");
    if (i0 < 1)
        throw ParameterError("i0 must be a positive integer");
}

bool is_mfb(Strategy strategy, std::int64_t k)
{
    return strategy == Strategy::C ? k >= 2 : k >= 1;
}

double stop_probability(Instance const& inst,
                        LatticeState const& state,
                        std::int64_t time)
{
    if (state.position() == 0)
        return 1.0;
    if (!state.on_barrier() || !is_mfb(inst.strategy, state.segment()))
        return 0.0;
    // B's starting barrier is delayed by one time step
    if (inst.strategy == Strategy::B && time == 0 && state.segment() == 1)
        return 0.0;
    return inst.s();
}

double stop_probability(Instance const& inst,
                        std::int64_t position,
                        std::int64_t time)
{
    return stop_probability(inst, LatticeState{position, inst.i0()}, time);
}

std::string describe(StopRegime regime)
{
    switch (regime)
    {
        case StopRegime::Never:
            return "s=0";
        case StopRegime::Sometimes:
            return "0<s<1";
        case StopRegime::Always:
            return "s=1";
    }
    return "?";
}

}  // namespace ruin
