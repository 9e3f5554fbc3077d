#pragma once

#include <stdexcept>

namespace gfib {

/// The order d >= 2 selecting the sequence family (d = 2 Fibonacci,
/// d = 3 Tribonacci, ...).
class Order {
public:
    explicit Order(int d) : d_(d) {
        if (d < 2) throw std::invalid_argument("order d must be >= 2");
    }

    int value() const { return d_; }

    friend bool operator==(Order a, Order b) { return a.d_ == b.d_; }

private:
    int d_;
};

}  // namespace gfib
