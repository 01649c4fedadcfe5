#pragma once

#include <stdexcept>
#include <string>

#include "qcomb/bigint.hpp"

namespace qcomb {

/// An enumeration cell would exceed the configured structure cap.
class CapacityError : public std::runtime_error {
public:
    CapacityError(std::string what, BigInt estimate, BigInt cap)
        : std::runtime_error(std::move(what)), estimate_(std::move(estimate)), cap_(std::move(cap))
    {
    }

    const BigInt& estimate() const noexcept { return estimate_; }
    const BigInt& cap() const noexcept { return cap_; }

private:
    BigInt estimate_;
    BigInt cap_;
};

/// A broken internal invariant (non-exact division, disagreeing dual routes, ...).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qcomb
