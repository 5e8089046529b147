#pragma once

#include <stdexcept>
#include <string>

namespace vslam {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& msg = "matrix is not positive definite")
        : Error(msg) {}
};

struct NotPsd : Error {
    explicit NotPsd(const std::string& msg = "matrix is not positive semi-definite")
        : Error(msg) {}
};

struct DisparityTooSmall : Error {
    explicit DisparityTooSmall(double d, double dmin)
        : Error("disparity " + std::to_string(d) + " px is at or below minimum " +
                std::to_string(dmin) + " px") {}
};

struct NotVisible : Error {
    explicit NotVisible(const std::string& msg = "point is not visible from this pose")
        : Error(msg) {}
};

struct ImageTooSmall : Error {
    explicit ImageTooSmall(int w, int h, int min_dim)
        : Error("image " + std::to_string(w) + "x" + std::to_string(h) +
                " is smaller than the required minimum dimension " + std::to_string(min_dim)) {}
};

struct OutOfBounds : Error {
    explicit OutOfBounds(const std::string& msg = "out of bounds") : Error(msg) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(std::size_t a, std::size_t b)
        : Error("sequence lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct MatchEmpty : Error {
    explicit MatchEmpty(const std::string& msg = "cannot match against an empty map")
        : Error(msg) {}
};

struct SeparationUnsatisfiable : Error {
    explicit SeparationUnsatisfiable(int n, double min_dist)
        : Error("could not place " + std::to_string(n) +
                " descriptors with pairwise separation >= " + std::to_string(min_dist)) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

struct SchemaViolation : Error {
    explicit SchemaViolation(const std::string& msg) : Error(msg) {}
};

struct ChecksumMismatch : Error {
    explicit ChecksumMismatch(const std::string& file)
        : Error("checksum mismatch for " + file) {}
};

}  // namespace vslam
