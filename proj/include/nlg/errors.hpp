#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nlg {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The game is not an XOR game: some input has both output parities winning,
// or both losing.
class not_xor_game : public error {
public:
    using error::error;
};

// XOR game whose winning parity is not constant on Hamming-weight classes.
class not_symmetric : public error {
public:
    using error::error;
};

class not_binary_inputs : public error {
public:
    using error::error;
};

class shape_mismatch : public error {
public:
    using error::error;
};

// Enumeration would exceed the configured cap.
class cap_exceeded : public error {
public:
    cap_exceeded(std::uint64_t needed, std::uint64_t cap, const std::string& hint)
        : error("enumeration cap exceeded: need " + std::to_string(needed) +
                " > cap " + std::to_string(cap) + (hint.empty() ? "" : "; " + hint)),
          needed(needed),
          cap(cap) {}

    std::uint64_t needed;
    std::uint64_t cap;
};

// Iterative solver hit its iteration cap; carries the bracket reached so far.
class no_convergence : public error {
public:
    no_convergence(double lower, double upper, int iterations)
        : error("no convergence after " + std::to_string(iterations) +
                " iterations; bracket [" + std::to_string(lower) + ", " +
                std::to_string(upper) + "]"),
          lower(lower),
          upper(upper),
          iterations(iterations) {}

    double lower;
    double upper;
    int iterations;
};

} // namespace nlg
