#pragma once

#include <cstdlib>
#include <iostream>

// Minimal test support: each test is a plain main() that aborts with a
// file:line message on the first failing requirement.

// Variadic so brace-enclosed commas in the condition do not split arguments.
#define REQUIRE(...)                                                        \
    do {                                                                    \
        if (!(__VA_ARGS__)) {                                               \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << ": "   \
                      << #__VA_ARGS__ << "\n";                              \
            std::exit(1);                                                   \
        }                                                                   \
    } while (0)

// Streams both values; use only with operator<<-printable operands.
#define REQUIRE_EQ(a, b)                                                    \
    do {                                                                    \
        const auto va_ = (a);                                               \
        const auto vb_ = (b);                                               \
        if (!(va_ == vb_)) {                                                \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << ": "   \
                      << #a << " == " << #b << "  (" << va_ << " vs "       \
                      << vb_ << ")\n";                                      \
            std::exit(1);                                                   \
        }                                                                   \
    } while (0)

#define REQUIRE_THROWS(...)                                                 \
    do {                                                                    \
        bool threw_ = false;                                                \
        try {                                                               \
            (void)(__VA_ARGS__);                                            \
        } catch (...) {                                                     \
            threw_ = true;                                                  \
        }                                                                   \
        if (!threw_) {                                                      \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__           \
                      << ": expected an exception from " << #__VA_ARGS__    \
                      << "\n";                                              \
            std::exit(1);                                                   \
        }                                                                   \
    } while (0)
