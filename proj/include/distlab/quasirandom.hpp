#pragma once

#include <vector>

namespace distlab {

// Low-discrepancy Halton sequence over [0,1)^dim. The seed only shifts the
// starting index, so a run is reproducible from (dim, seed) alone.
class Halton {
  public:
    explicit Halton(int dim, unsigned seed = 1) : dim_(dim), index_(64 + 1000ull * seed) {}

    std::vector<double> next() {
        static constexpr int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        std::vector<double> u(dim_);
        for (int d = 0; d < dim_; ++d) u[d] = radical_inverse(index_, primes[d % 12]);
        ++index_;
        return u;
    }

  private:
    static double radical_inverse(unsigned long long i, int base) {
        double inv = 1.0 / base, f = inv, x = 0.0;
        while (i > 0) {
            x += f * (i % base);
            i /= base;
            f *= inv;
        }
        return x;
    }
    int dim_;
    unsigned long long index_;
};

}  // namespace distlab
