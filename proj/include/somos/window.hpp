#ifndef SOMOS_WINDOW_HPP
#define SOMOS_WINDOW_HPP

#include <string>
#include <vector>

#include "somos/rational.hpp"

namespace somos {

// Contiguous run of exact sequence terms with an explicit integer offset.
// Sequences here are indexed over all of Z; nothing is implicitly 0-based.
struct SequenceWindow {
    long long offset = 0;
    std::vector<Rational> terms;

    long long lo() const { return offset; }
    long long hi() const { return offset + static_cast<long long>(terms.size()) - 1; }
    bool contains(long long n) const { return n >= lo() && n <= hi(); }

    const Rational &at(long long n) const
    {
        if (!contains(n)) {
            throw range_error("index " + std::to_string(n) + " outside window [" +
                              std::to_string(lo()) + ", " + std::to_string(hi()) + "]");
        }
        return terms[static_cast<std::size_t>(n - offset)];
    }
    Rational &at(long long n)
    {
        return const_cast<Rational &>(static_cast<const SequenceWindow *>(this)->at(n));
    }

    std::vector<long long> zero_indices() const
    {
        std::vector<long long> z;
        for (long long n = lo(); n <= hi(); ++n) {
            if (at(n) == 0) {
                z.push_back(n);
            }
        }
        return z;
    }

    // CSV with columns: index, numerator, denominator.
    std::string to_csv() const
    {
        std::string s = "index,numerator,denominator\n";
        for (long long n = lo(); n <= hi(); ++n) {
            s += std::to_string(n) + "," + numer(at(n)).str() + "," + denom(at(n)).str() + "\n";
        }
        return s;
    }
};

}

#endif
