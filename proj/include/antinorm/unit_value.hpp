#pragma once

#include <stdexcept>

namespace antinorm {

// Scalar confined to [0,1]. Out-of-range or NaN input is a construction
// error; there is deliberately no clamping.
class UnitValue {
public:
    explicit UnitValue(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("UnitValue: value must lie in [0,1]");
    }

    double value() const noexcept { return v_; }

private:
    double v_;
};

} // namespace antinorm
