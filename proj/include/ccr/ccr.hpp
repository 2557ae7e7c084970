#ifndef CCR_CCR_HPP
#define CCR_CCR_HPP

#include <ccr/ccr_crt.hpp>
#include <ccr/ccr_float.hpp>
#include <ccr/ccr_series.hpp>
#include <ccr/divpoly.hpp>
#include <ccr/elkies.hpp>
#include <ccr/floateval.hpp>
#include <ccr/qseries.hpp>
#include <ccr/volcano.hpp>
#include <ccr/weighted_poly.hpp>

#endif
