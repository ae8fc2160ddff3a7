#pragma once

#include <functional>
#include <optional>

#include "qslice/error.hpp"
#include "qslice/slice_function.hpp"

namespace qslice::detail {

/// Branch value at z given the value at the previous accepted point, or
/// nullopt when the step is too long to decide.
using BranchStep = std::function<std::optional<Complex>(Complex z, Complex previous)>;

inline constexpr int kContinuationDepth = 30;

/// Continues a scalar branch along the segment from -> to.
Complex continue_on_segment(Complex from, Complex to, Complex value, const BranchStep& step, ErrorCode failure);

/// Continues from the basepoint to z inside the domain. Off-real domains are
/// handled on the upper component and reflected, so the result satisfies
/// v(conj z) = conj v(z).
Complex continue_in_domain(const Domain& d, Complex basepoint, Complex base_value, Complex z,
                           const BranchStep& step, ErrorCode failure);

}  // namespace qslice::detail
