#pragma once

#include <stdexcept>
#include <string>

namespace sdesign {

enum class Errc {
    invalid_argument,
    parse,
    io,
    not_transitive,
    not_symmetric,
    not_automorphism,
    not_difference_set,
    out_of_range,
    timeout,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sdesign
