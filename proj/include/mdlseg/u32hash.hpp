#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace mdlseg {

// Transparent hash so u32string-keyed maps accept u32string_view lookups
// without allocating.
struct U32Hash {
    using is_transparent = void;
    std::size_t operator()(std::u32string_view s) const noexcept {
        return std::hash<std::u32string_view>{}(s);
    }
    std::size_t operator()(const std::u32string& s) const noexcept {
        return std::hash<std::u32string_view>{}(s);
    }
};

} // namespace mdlseg
