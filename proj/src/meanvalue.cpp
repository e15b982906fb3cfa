#include "zetalab/meanvalue.hpp"

#include <cmath>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/shift_stream.hpp"

namespace zetalab {

namespace {

std::optional<double> try_reference(const ZetaInstance& inst, double sigma0) {
    if (!(sigma0 > inst.sigma_star())) return std::nullopt;
    return inst.coefficient_second_moment(sigma0);
}

void check_finite(const std::vector<cplx>& v) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!finite(v[k]))
            throw overflow_error("mean_square: non-finite value at index " + std::to_string(k));
}

} // namespace

MeanSquare mean_square_discrete(const ZetaInstance& inst, double sigma0, double h,
                                std::uint64_t N, int threads) {
    auto values = stream_instance_shifts(inst, ShiftGrid{cplx{sigma0, 0.0}, h, N + 1}, threads);
    check_finite(values);
    KahanSum acc;
    for (cplx v : values) acc.add(std::norm(v));
    return {acc.value() / static_cast<double>(N + 1), try_reference(inst, sigma0), N + 1};
}

MeanSquare mean_square_continuous(const ZetaInstance& inst, double sigma0, double T, double step,
                                  int threads) {
    if (!(step > 0.0) || !(T > 0.0)) throw domain_error("mean_square: T and step must be positive");
    auto J = static_cast<std::uint64_t>(std::llround(T / step));
    if (J < 2) throw domain_error("mean_square: span shorter than two steps");

    auto values = stream_instance_shifts(inst, ShiftGrid{cplx{sigma0, 0.0}, step, J + 1}, threads);
    check_finite(values);
    KahanSum acc;
    acc.add(0.5 * std::norm(values.front()));
    for (std::uint64_t k = 1; k < J; ++k) acc.add(std::norm(values[k]));
    acc.add(0.5 * std::norm(values.back()));
    // trapezoid over [0, J*step], normalized by the snapped length
    return {acc.value() / static_cast<double>(J), try_reference(inst, sigma0), J + 1};
}

} // namespace zetalab
