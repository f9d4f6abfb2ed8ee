#include "fracdec/combinat.hpp"

#include <array>
#include <stdexcept>

namespace fracdec {

namespace {

constexpr int kPascalN = 65;

const std::array<std::array<std::uint64_t, kPascalN>, kPascalN>& pascal() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kPascalN>, kPascalN> t{};
        for (int n = 0; n < kPascalN; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n < kPascalN) return pascal()[n][k];
    Int z = binom_z(static_cast<unsigned long>(n), k);
    if (!z.fits_ulong_p()) throw std::overflow_error("binom: value exceeds uint64");
    return z.get_ui();
}

Int binom_z(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Int z;
    mpz_bin_uiui(z.get_mpz_t(), n, static_cast<unsigned long>(k));
    return z;
}

std::uint64_t colex_rank(const std::vector<int>& set) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < set.size(); ++i) r += binom(set[i], static_cast<long>(i) + 1);
    return r;
}

std::vector<int> colex_unrank(std::uint64_t rank, int n, int k) {
    std::vector<int> s(k);
    for (int i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        int v = i - 1;
        while (v + 1 < n + 1 && binom(v + 1, i) <= rank) ++v;
        s[i - 1] = v;
        rank -= binom(v, i);
    }
    if (rank != 0) throw std::out_of_range("colex_unrank: rank out of range");
    return s;
}

}  // namespace fracdec
