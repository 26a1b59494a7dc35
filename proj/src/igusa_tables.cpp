#include "g2split/genus2.hpp"

namespace g2split {

namespace detail {

// Coefficient monomials of the Igusa-Clebsch invariants: {indices of a_i}, c.
const std::array<Monomial2, 4> kI2 = {{
    {{{0, 6}}, -240},
    {{{1, 5}}, 40},
    {{{2, 4}}, -16},
    {{{3, 3}}, 6}
}};

const std::array<Monomial4, 16> kI4 = {{
    {{{0, 0, 6, 6}}, 1620},
    {{{0, 1, 5, 6}}, -540},
    {{{0, 2, 4, 6}}, -504},
    {{{0, 2, 5, 5}}, 300},
    {{{0, 3, 3, 6}}, 324},
    {{{0, 3, 4, 5}}, -180},
    {{{0, 4, 4, 4}}, 48},
    {{{1, 1, 4, 6}}, 300},
    {{{1, 1, 5, 5}}, -80},
    {{{1, 2, 3, 6}}, -180},
    {{{1, 2, 4, 5}}, 4},
    {{{1, 3, 3, 5}}, 36},
    {{{1, 3, 4, 4}}, -12},
    {{{2, 2, 2, 6}}, 48},
    {{{2, 2, 3, 5}}, -12},
    {{{2, 2, 4, 4}}, 4}
}};

const std::array<Monomial6, 56> kI6 = {{
    {{{0, 0, 0, 6, 6, 6}}, -119880},
    {{{0, 0, 1, 5, 6, 6}}, 59940},
    {{{0, 0, 2, 4, 6, 6}}, 20664},
    {{{0, 0, 2, 5, 5, 6}}, -18600},
    {{{0, 0, 3, 3, 6, 6}}, -10044},
    {{{0, 0, 3, 4, 5, 6}}, 3060},
    {{{0, 0, 3, 5, 5, 5}}, 2250},
    {{{0, 0, 4, 4, 4, 6}}, -96},
    {{{0, 0, 4, 4, 5, 5}}, -900},
    {{{0, 1, 1, 4, 6, 6}}, -18600},
    {{{0, 1, 1, 5, 5, 6}}, -2240},
    {{{0, 1, 2, 3, 6, 6}}, 3060},
    {{{0, 1, 2, 4, 5, 6}}, 3472},
    {{{0, 1, 2, 5, 5, 5}}, 1600},
    {{{0, 1, 3, 3, 5, 6}}, 1818},
    {{{0, 1, 3, 4, 4, 6}}, -876},
    {{{0, 1, 3, 4, 5, 5}}, -1860},
    {{{0, 1, 4, 4, 4, 5}}, 616},
    {{{0, 2, 2, 2, 6, 6}}, -96},
    {{{0, 2, 2, 3, 5, 6}}, -876},
    {{{0, 2, 2, 4, 4, 6}}, 424},
    {{{0, 2, 2, 4, 5, 5}}, -640},
    {{{0, 2, 3, 3, 4, 6}}, -468},
    {{{0, 2, 3, 3, 5, 5}}, 330},
    {{{0, 2, 3, 4, 4, 5}}, 492},
    {{{0, 2, 4, 4, 4, 4}}, -160},
    {{{0, 3, 3, 3, 3, 6}}, 162},
    {{{0, 3, 3, 3, 4, 5}}, -198},
    {{{0, 3, 3, 4, 4, 4}}, 60},
    {{{1, 1, 1, 3, 6, 6}}, 2250},
    {{{1, 1, 1, 4, 5, 6}}, 1600},
    {{{1, 1, 1, 5, 5, 5}}, -320},
    {{{1, 1, 2, 2, 6, 6}}, -900},
    {{{1, 1, 2, 3, 5, 6}}, -1860},
    {{{1, 1, 2, 4, 4, 6}}, -640},
    {{{1, 1, 2, 4, 5, 5}}, 64},
    {{{1, 1, 3, 3, 4, 6}}, 330},
    {{{1, 1, 3, 3, 5, 5}}, 176},
    {{{1, 1, 3, 4, 4, 5}}, 26},
    {{{1, 1, 4, 4, 4, 4}}, -36},
    {{{1, 2, 2, 2, 5, 6}}, 616},
    {{{1, 2, 2, 3, 4, 6}}, 492},
    {{{1, 2, 2, 3, 5, 5}}, 26},
    {{{1, 2, 2, 4, 4, 5}}, 28},
    {{{1, 2, 3, 3, 3, 6}}, -198},
    {{{1, 2, 3, 3, 4, 5}}, -238},
    {{{1, 2, 3, 4, 4, 4}}, 76},
    {{{1, 3, 3, 3, 3, 5}}, 72},
    {{{1, 3, 3, 3, 4, 4}}, -24},
    {{{2, 2, 2, 2, 4, 6}}, -160},
    {{{2, 2, 2, 2, 5, 5}}, -36},
    {{{2, 2, 2, 3, 3, 6}}, 60},
    {{{2, 2, 2, 3, 4, 5}}, 76},
    {{{2, 2, 2, 4, 4, 4}}, -24},
    {{{2, 2, 3, 3, 3, 5}}, -24},
    {{{2, 2, 3, 3, 4, 4}}, 8}
}};

}  // namespace detail

}  // namespace g2split
