#pragma once

#include <cstdint>
#include <stdexcept>

namespace rimhook::detail {

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("coefficient addition overflows 64 bits");
    }
    return r;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("coefficient multiplication overflows 64 bits");
    }
    return r;
}

}  // namespace rimhook::detail
