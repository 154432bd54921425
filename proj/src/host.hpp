#pragma once

// Uniform view over bipartite and complete colorings with global vertex ids.
// Bipartite ids put the left class first: left u -> u, right v -> m + v.

#include <cstddef>

#include "altpaths/core.hpp"

namespace altpaths::detail {

class Host {
public:
    explicit Host(const ColoringMatrix& c) : bip_(&c), size_(c.m() + c.n()), split_(c.m()), r_(c.r()) {}
    explicit Host(const CompleteColoring& c) : comp_(&c), size_(c.n()), split_(c.n()), r_(c.r()) {}

    std::size_t size() const { return size_; }
    unsigned r() const { return r_; }
    bool bipartite() const { return bip_ != nullptr; }

    /// 0 when there is no edge (same class, or a == b).
    Color color(std::size_t a, std::size_t b) const {
        if (bip_) {
            if (a < split_) {
                return b >= split_ ? (*bip_)(a, b - split_) : Color{0};
            }
            return b < split_ ? (*bip_)(b, a - split_) : Color{0};
        }
        return (*comp_)(a, b);
    }

    /// Candidate neighbours of a form the half-open id range [first, last).
    std::size_t neighbours_begin(std::size_t a) const { return bip_ && a < split_ ? split_ : 0; }
    std::size_t neighbours_end(std::size_t a) const { return bip_ && a >= split_ ? split_ : size_; }

    std::size_t global(const Vertex& v) const {
        return bip_ && v.side == Side::right ? split_ + v.index : v.index;
    }
    Vertex vertex(std::size_t g) const {
        if (bip_ && g >= split_) {
            return {Side::right, g - split_};
        }
        return {Side::left, g};
    }

    bool contains(const Vertex& v) const {
        if (bip_) {
            return v.index < bip_->class_size(v.side);
        }
        return v.side == Side::left && v.index < comp_->n();
    }

private:
    const ColoringMatrix* bip_ = nullptr;
    const CompleteColoring* comp_ = nullptr;
    std::size_t size_;
    std::size_t split_;
    unsigned r_;
};

}  // namespace altpaths::detail
