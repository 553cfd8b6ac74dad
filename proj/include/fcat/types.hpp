#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fcat {

using cplx = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingFEntry : Error { using Error::Error; };
struct NoBraiding : Error { using Error::Error; };
struct InvalidTriple : Error { using Error::Error; };
struct ZeroGauge : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct InvalidSign : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct IrreducibleDiagram : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct TetrahedralRequired : Error { using Error::Error; };
struct UnsupportedCategory : Error { using Error::Error; };

/// Simple object of a fusion category. Index 0 is always the vacuum.
struct Label {
    int index = 0;
    std::string name;
    int dual = 0;
};

// Packs up to six small indices into one hash key (labels fit in 8 bits).
inline std::uint64_t pack6(int a, int b, int c, int d, int e, int f) {
    return (std::uint64_t(std::uint8_t(a)) << 40) | (std::uint64_t(std::uint8_t(b)) << 32) |
           (std::uint64_t(std::uint8_t(c)) << 24) | (std::uint64_t(std::uint8_t(d)) << 16) |
           (std::uint64_t(std::uint8_t(e)) << 8) | std::uint64_t(std::uint8_t(f));
}

inline std::uint64_t pack3(int a, int b, int c) { return pack6(0, 0, 0, a, b, c); }

}  // namespace fcat
