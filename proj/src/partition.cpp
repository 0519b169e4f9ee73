#include "pieri/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace pieri {

void Partition::normalize() {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::dual() const {
    if (parts_.empty()) return {};
    std::vector<int> d(parts_[0], 0);
    for (int p : parts_)
        for (int i = 0; i < p; ++i) ++d[i];
    return Partition(std::move(d));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

Partition Partition::parse(const std::string& text) {
    size_t b = text.find('('), e = text.rfind(')');
    std::string body = (b != std::string::npos && e != std::string::npos && e > b)
                           ? text.substr(b + 1, e - b - 1)
                           : text;
    std::vector<int> parts;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) return;
        size_t pos = 0;
        int v = std::stoi(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("Partition: bad token '" + cur + "'");
        parts.push_back(v);
        cur.clear();
    };
    for (char c : body) {
        if (c == ',' || c == ' ') {
            flush();
        } else {
            cur += c;
        }
    }
    flush();
    return Partition(std::move(parts));
}

bool is_vertical_strip(const Partition& beta, const Partition& alpha) {
    if (!beta.contains(alpha)) return false;
    for (int i = 2; i <= beta.length(); ++i)
        if (beta.part(i) > alpha.part(i - 1)) return false;
    return true;
}

bool is_horizontal_strip(const Partition& beta, const Partition& alpha) {
    if (!beta.contains(alpha)) return false;
    for (int i = 1; i <= beta.length(); ++i)
        if (beta.part(i) - alpha.part(i) > 1) return false;
    return true;
}

Partition partition_union(const Partition& a, const Partition& b) {
    std::vector<int> parts(std::max(a.length(), b.length()));
    for (size_t i = 0; i < parts.size(); ++i) parts[i] = std::max(a.part((int)i + 1), b.part((int)i + 1));
    return Partition(std::move(parts));
}

bool lex_less(const Partition& a, const Partition& b) {
    int m = std::max(a.length(), b.length());
    for (int i = 1; i <= m; ++i) {
        if (b.part(i) != a.part(i)) return b.part(i) > a.part(i);
    }
    return false;
}

static void strip_rec(const Partition& alpha, int max_len, int pos, int remaining, bool vertical,
                      std::vector<int>& cur, std::vector<Partition>& out) {
    if (pos > max_len) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    int lo = alpha.part(pos);
    int hi;
    if (vertical) {
        // beta_pos <= alpha_{pos-1} for pos >= 2; beta_1 unbounded above except by budget
        hi = pos == 1 ? alpha.part(1) + remaining : std::min(alpha.part(pos - 1), lo + remaining);
    } else {
        hi = std::min(lo + 1, lo + remaining);
    }
    if (pos > 1) hi = std::min(hi, cur[pos - 2]);  // keep weakly decreasing
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        strip_rec(alpha, max_len, pos + 1, remaining - (v - lo), vertical, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> vertical_strip_extensions(const Partition& alpha, int b, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (alpha.length() > max_len) return out;
    strip_rec(alpha, max_len, 1, b, true, cur, out);
    return out;
}

std::vector<Partition> horizontal_strip_extensions(const Partition& alpha, int b, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (alpha.length() > max_len) return out;
    strip_rec(alpha, max_len, 1, b, false, cur, out);
    return out;
}

static void partitions_rec(int n, int max_len, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    if ((int)cur.size() == max_len) return;
    int hi = cur.empty() ? max_part : std::min(max_part, cur.back());
    for (int v = std::min(hi, n); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(n - v, max_len, max_part, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int n, int max_len, int max_part) {
    if (max_part <= 0) max_part = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (n < 0) return out;
    partitions_rec(n, max_len, max_part, cur, out);
    return out;
}

}  // namespace pieri
