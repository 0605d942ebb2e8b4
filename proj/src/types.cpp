#include "altfree/types.hpp"

#include <algorithm>
#include <bit>

namespace altfree {

bool Bits::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

int Bits::count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int Bits::next_set(int from) const {
    if (from < 0) from = 0;
    if (from >= n_) return -1;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (w) {
            int idx = static_cast<int>(wi * 64) + std::countr_zero(w);
            return idx < n_ ? idx : -1;
        }
        if (++wi >= words_.size()) return -1;
        w = words_[wi];
    }
}

Bits Bits::operator&(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
}

Bits Bits::operator|(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
}

Bits Bits::and_not(const Bits& o) const {
    Bits r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
}

BinaryMatrix::BinaryMatrix(int n_rows, int n_cols) : rows_(n_rows), cols_(n_cols) {
    if (n_rows < 0 || n_cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
    words_ = static_cast<std::size_t>((n_cols + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n_rows) * words_, 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    BinaryMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
        for (int j = 0; j < c; ++j) {
            char ch = rows[i][static_cast<std::size_t>(j)];
            if (ch == '1')
                m.set(i, j, true);
            else if (ch != '0')
                throw std::invalid_argument("matrix entries must be '0' or '1'");
        }
    }
    return m;
}

void BinaryMatrix::set(int r, int c, bool v) {
    auto& w = bits_[static_cast<std::size_t>(r) * words_ + (static_cast<std::size_t>(c) >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
        w |= mask;
    else
        w &= ~mask;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) m.set(c, r, true);
    return m;
}

static void check_permutation(const std::vector<int>& order, int n, const char* what) {
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument(std::string(what) + ": permutation has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument(std::string(what) + ": not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

BinaryMatrix BinaryMatrix::permuted_rows(const std::vector<int>& order) const {
    check_permutation(order, rows_, "permuted_rows");
    BinaryMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r) {
        const std::size_t src = static_cast<std::size_t>(order[static_cast<std::size_t>(r)]) * words_;
        std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(src), words_,
                    m.bits_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(r) * words_));
    }
    return m;
}

BinaryMatrix BinaryMatrix::permuted_cols(const std::vector<int>& order) const {
    check_permutation(order, cols_, "permuted_cols");
    BinaryMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, order[static_cast<std::size_t>(c)])) m.set(r, c, true);
    return m;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) {
        std::string s(static_cast<std::size_t>(cols_), '0');
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) s[static_cast<std::size_t>(c)] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

OrderedHypergraph make_hypergraph(int n_vertices, std::vector<std::vector<int>> edges) {
    if (n_vertices < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0 || e[i] >= n_vertices)
                throw std::invalid_argument("edge vertex " + std::to_string(e[i]) + " out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("vertex repeated within an edge");
        }
    }
    return OrderedHypergraph{n_vertices, std::move(edges)};
}

BinaryMatrix incidence(const OrderedHypergraph& h) {
    BinaryMatrix m(h.n_vertices, static_cast<int>(h.edges.size()));
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e)
        for (int v : h.edges[static_cast<std::size_t>(e)]) m.set(v, e, true);
    return m;
}

OrderedHypergraph from_incidence(const BinaryMatrix& m) {
    OrderedHypergraph h;
    h.n_vertices = m.n_rows();
    h.edges.resize(static_cast<std::size_t>(m.n_cols()));
    for (int c = 0; c < m.n_cols(); ++c)
        for (int r = 0; r < m.n_rows(); ++r)
            if (m.get(r, c)) h.edges[static_cast<std::size_t>(c)].push_back(r);
    return h;
}

OrderedHypergraph apply_vertex_order(const OrderedHypergraph& h, const std::vector<int>& order) {
    check_permutation(order, h.n_vertices, "apply_vertex_order");
    std::vector<int> pos(static_cast<std::size_t>(h.n_vertices));
    for (int k = 0; k < h.n_vertices; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    OrderedHypergraph out;
    out.n_vertices = h.n_vertices;
    out.edges.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        std::vector<int> ne;
        ne.reserve(e.size());
        for (int v : e) ne.push_back(pos[static_cast<std::size_t>(v)]);
        std::sort(ne.begin(), ne.end());
        out.edges.push_back(std::move(ne));
    }
    return out;
}

OrderedHypergraph dedupe_edges(const OrderedHypergraph& h) {
    OrderedHypergraph out;
    out.n_vertices = h.n_vertices;
    for (const auto& e : h.edges)
        if (std::find(out.edges.begin(), out.edges.end(), e) == out.edges.end()) out.edges.push_back(e);
    return out;
}

std::vector<Bits> edge_masks(const OrderedHypergraph& h) {
    std::vector<Bits> masks;
    masks.reserve(h.edges.size());
    for (const auto& e : h.edges) {
        Bits b(h.n_vertices);
        for (int v : e) b.set(v);
        masks.push_back(std::move(b));
    }
    return masks;
}

Pattern Pattern::X(int t) {
    if (t < 1) throw std::invalid_argument("pattern length must be positive");
    BinaryMatrix m(t, 2);
    for (int i = 0; i < t; ++i) m.set(i, i % 2 == 0 ? 1 : 0, true);
    return Pattern{std::move(m), "X" + std::to_string(t)};
}

Pattern Pattern::Xp(int t) {
    if (t < 1) throw std::invalid_argument("pattern length must be positive");
    BinaryMatrix m(t, 2);
    for (int i = 0; i < t; ++i) m.set(i, i % 2 == 0 ? 0 : 1, true);
    return Pattern{std::move(m), "X" + std::to_string(t) + "p"};
}

Pattern Pattern::XT(int t) {
    Pattern p = X(t);
    return Pattern{p.matrix.transposed(), "X" + std::to_string(t) + "T"};
}

Pattern Pattern::XpT(int t) {
    Pattern p = Xp(t);
    return Pattern{p.matrix.transposed(), "X" + std::to_string(t) + "pT"};
}

std::optional<Pattern> Pattern::by_name(const std::string& name) {
    if (name.size() < 2 || name[0] != 'X') return std::nullopt;
    std::size_t i = 1;
    std::size_t digits = 0;
    long t = 0;
    while (i < name.size() && name[i] >= '0' && name[i] <= '9') {
        t = t * 10 + (name[i] - '0');
        if (t > 1000000) return std::nullopt;
        ++i;
        ++digits;
    }
    if (digits == 0 || t < 1) return std::nullopt;
    bool prime = false, transpose = false;
    if (i < name.size() && name[i] == 'p') {
        prime = true;
        ++i;
    }
    if (i < name.size() && name[i] == 'T') {
        transpose = true;
        ++i;
    }
    if (i != name.size()) return std::nullopt;
    const int ti = static_cast<int>(t);
    if (prime && transpose) return XpT(ti);
    if (prime) return Xp(ti);
    if (transpose) return XT(ti);
    return X(ti);
}

}  // namespace altfree
