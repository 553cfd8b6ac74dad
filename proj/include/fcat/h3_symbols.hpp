#pragma once

#include <cstddef>
#include <cstdint>

namespace fcat {

enum class H3Coef : std::uint8_t { One, A, SqrtA, B, C, Dp, Dm };

struct H3Entry {
    std::uint8_t u, a, b, c, q, p;
    std::int8_t sign;
    H3Coef coef;
    std::uint8_t p1pow, p2pow;
};

extern const H3Entry kH3Entries[];
extern const std::size_t kH3EntryCount;

}  // namespace fcat
