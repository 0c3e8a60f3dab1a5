#include "schur/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schur {

namespace {

void check_weakly_decreasing(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i + 1 < p.size() && p[i] < p[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

void strip_zeros(std::vector<int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    check_weakly_decreasing(parts_);
    strip_zeros(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing(parts_);
    strip_zeros(parts_);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        if (tok.empty())
            throw std::invalid_argument("empty entry in partition '" + text + "'");
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument("bad partition entry '" + tok + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

BoxShape::BoxShape(int m, int g) : rows(m), cols(g) {
    if (m < 1) throw std::invalid_argument("box needs at least one row");
    if (g < 1 || g > 3) throw std::invalid_argument("box width must be 1, 2 or 3");
}

Partition transpose(const Partition& la) {
    if (la.length() == 0) return Partition();
    std::vector<int> cols(la.parts()[0], 0);
    for (int r = 0; r < la.length(); ++r)
        for (int c = 0; c < la.parts()[r]; ++c) cols[c] += 1;
    return Partition(std::move(cols));
}

bool fits_in_box(const Partition& la, const BoxShape& box) {
    return la.length() <= box.rows && la.part(0) <= box.cols;
}

std::vector<Partition> enumerate_box(const BoxShape& box) {
    std::vector<Partition> out;
    // g <= 3, so walk part-count triples directly: j parts of 3, k of 2, l of 1.
    std::vector<int> parts;
    const int m = box.rows, g = box.cols;
    auto push = [&](int threes, int twos, int ones) {
        parts.clear();
        parts.insert(parts.end(), threes, 3);
        parts.insert(parts.end(), twos, 2);
        parts.insert(parts.end(), ones, 1);
        out.push_back(Partition(parts));
    };
    for (int j = 0; j <= (g >= 3 ? m : 0); ++j)
        for (int k = 0; k <= (g >= 2 ? m - j : 0); ++k)
            for (int l = 0; l <= m - j - k; ++l) push(j, k, l);
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return y < x;  // lexicographically descending within one size
    });
    return out;
}

G3Decomposition g3_decompose(const Partition& lambda_prime) {
    if (lambda_prime.length() > 3)
        throw std::invalid_argument("decomposition needs at most 3 parts");
    G3Decomposition d;
    const int p3 = lambda_prime.part(2);
    d.epsilon = p3 % 2;
    d.k = (p3 - d.epsilon) / 2;
    d.z = lambda_prime.part(0) - lambda_prime.part(1);
    d.b_prime = lambda_prime.part(1) - p3;
    return d;
}

Partition g3_reconstruct(const G3Decomposition& d) {
    const int third = d.epsilon + 2 * d.k;
    return Partition{d.z + d.b_prime + third, d.b_prime + third, third};
}

}  // namespace schur
