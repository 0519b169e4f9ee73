#pragma once

#include <string>
#include <vector>

namespace pieri {

// Partition: weakly decreasing nonnegative integers, trailing zeros trimmed.
// Parts double as GL highest-weight coordinates; the drawing convention
// (lambda_i boxes in the i-th column) only matters for rendering.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i >= 1 && i <= (int)parts_.size() ? parts_[i - 1] : 0; }  // 1-based
    int size() const;
    int length() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }

    Partition dual() const;
    bool contains(const Partition& other) const;  // other subseteq this

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // container ordering (not the domain lex order; see lex_less)
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;                            // "(5,3,1)"
    static Partition parse(const std::string& text);    // accepts trailing zeros

private:
    std::vector<int> parts_;
    void normalize();
};

// beta/alpha is a vertical strip: alpha subseteq beta and beta_i <= alpha_{i-1} for i >= 2.
bool is_vertical_strip(const Partition& beta, const Partition& alpha);
// beta/alpha is a horizontal strip: dual(beta)/dual(alpha) is a vertical strip,
// equivalently beta_i - alpha_i <= 1 for all i.
bool is_horizontal_strip(const Partition& beta, const Partition& alpha);

Partition partition_union(const Partition& a, const Partition& b);

// a < b in the lexicographic order on partitions: first nonzero entry of (b_i - a_i) is positive.
bool lex_less(const Partition& a, const Partition& b);

// All beta with (beta, alpha) in VS and |beta/alpha| = b, at most max_len parts.
std::vector<Partition> vertical_strip_extensions(const Partition& alpha, int b, int max_len);
// Same for horizontal strips.
std::vector<Partition> horizontal_strip_extensions(const Partition& alpha, int b, int max_len);

// All partitions of n with at most max_len parts (and parts <= max_part if > 0).
std::vector<Partition> partitions_of(int n, int max_len, int max_part = 0);

}  // namespace pieri
