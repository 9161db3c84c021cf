#include "p4/partition.hpp"

#include <algorithm>
#include <sstream>

namespace p4 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int rows, int width) {
    if (rows < 0 || width < 0) throw Error("rectangle dimensions must be nonnegative");
    if (rows == 0 || width == 0) return Partition();
    return Partition(std::vector<int>(static_cast<size_t>(rows), width));
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<size_t>(i - 1)];
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> c(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
}

std::vector<int> Partition::hooks() const {
    const Partition conj = conjugate();
    std::vector<int> h;
    h.reserve(static_cast<size_t>(weight()));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            h.push_back(part(i) + conj.part(j) - i - j + 1);
    return h;
}

Integer Partition::hook_product() const {
    Integer p = 1;
    for (int h : hooks()) p *= h;
    return p;
}

bool Partition::is_3_reduced() const {
    for (int h : hooks())
        if (h % 3 == 0) return false;
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition Partition::parse(std::string_view s) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool parens = i < s.size() && s[i] == '(';
    if (parens) ++i;
    std::vector<int> parts;
    skip_ws();
    while (i < s.size() && s[i] != ')') {
        bool neg = false;
        if (s[i] == '-') { neg = true; ++i; }
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad partition literal: \"" + std::string(s) + "\"");
        long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + (s[i++] - '0');
        if (neg) throw ParseError("partition parts must be nonnegative");
        parts.push_back(static_cast<int>(v));
        skip_ws();
        if (i < s.size() && s[i] == ',') { ++i; skip_ws(); }
    }
    if (parens) {
        if (i >= s.size() || s[i] != ')')
            throw ParseError("unterminated partition literal: \"" + std::string(s) + "\"");
        ++i;
        skip_ws();
    }
    if (i != s.size()) throw ParseError("trailing characters in partition literal");
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + ": \"" + std::string(s) + "\"");
    }
}

MayaDiagram::MayaDiagram(long cutoff, std::vector<long> heads)
    : cutoff_(cutoff), heads_(std::move(heads)) {
    std::sort(heads_.begin(), heads_.end(), std::greater<long>());
    heads_.erase(std::unique(heads_.begin(), heads_.end()), heads_.end());
    for (long h : heads_)
        if (h < cutoff_) throw Error("maya head below cutoff");
    canonicalize();
}

void MayaDiagram::canonicalize() {
    // Raise the cutoff through any contiguous run of heads sitting right on it.
    while (!heads_.empty() && heads_.back() == cutoff_) {
        heads_.pop_back();
        ++cutoff_;
    }
}

MayaDiagram MayaDiagram::of_partition(const Partition& lambda, int slots) {
    if (slots < lambda.length()) throw Error("slot count below partition length");
    std::vector<long> heads;
    heads.reserve(static_cast<size_t>(slots));
    for (int i = 1; i <= slots; ++i) heads.push_back(lambda.part(i) - i + slots);
    return MayaDiagram(0, std::move(heads));
}

bool MayaDiagram::contains(long m) const {
    if (m < cutoff_) return true;
    return std::find(heads_.begin(), heads_.end(), m) != heads_.end();
}

MayaDiagram MayaDiagram::with_added(long m) const {
    if (contains(m)) throw Error("position already occupied");
    std::vector<long> h = heads_;
    h.push_back(m);
    return MayaDiagram(cutoff_, std::move(h));
}

MayaDiagram MayaDiagram::shifted(long k) const {
    std::vector<long> h = heads_;
    for (long& x : h) x += k;
    return MayaDiagram(cutoff_ + k, std::move(h));
}

Partition MayaDiagram::to_partition() const {
    const long r = static_cast<long>(heads_.size());
    std::vector<int> parts;
    parts.reserve(heads_.size());
    for (long i = 1; i <= r; ++i)
        parts.push_back(static_cast<int>(heads_[static_cast<size_t>(i - 1)] - cutoff_ - (r - i)));
    return Partition(std::move(parts));
}

std::string MayaDiagram::str() const {
    std::ostringstream os;
    os << "cutoff " << cutoff_ << ", heads [";
    for (size_t i = 0; i < heads_.size(); ++i) {
        if (i) os << ',';
        os << heads_[i];
    }
    os << ']';
    return os.str();
}

Partition maya_to_partition(const MayaDiagram& m) { return m.to_partition(); }

Partition lambda_mn(int m, int n) {
    const long bound = -3L * (std::abs(m) + std::abs(n) + 2);
    const long top = std::max({3L * (m - 1), 3L * (n - 1) + 1, -1L});
    auto member = [&](long v) {
        long r = ((v % 3) + 3) % 3;
        long k = (v - r) / 3;
        if (r == 0) return k < m;
        if (r == 1) return k < n;
        return k < 0;
    };
    std::vector<long> heads;
    for (long v = bound; v <= top; ++v)
        if (member(v)) heads.push_back(v);
    return MayaDiagram(bound, std::move(heads)).to_partition();
}

namespace {
void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<Partition> partitions_of(int weight) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (weight >= 0) gen_partitions(weight, weight == 0 ? 1 : weight, cur, out);
    return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; ++w) {
        auto pw = partitions_of(w);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

} // namespace p4
