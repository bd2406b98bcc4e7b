#pragma once

#include <string>
#include <string_view>

namespace mdlseg::utf8 {

// Decodes UTF-8 into code points. Throws std::runtime_error on malformed
// input; the message contains the byte offset.
std::u32string decode(std::string_view bytes);

std::string encode(std::u32string_view text);
std::string encode(char32_t cp);

} // namespace mdlseg::utf8
