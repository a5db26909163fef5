#include "decomp/group.hpp"

#include <fstream>
#include <sstream>

#include "decomp/permutation.hpp"
#include "decomp/rng.hpp"

namespace decomp {

namespace {

std::string format_witness(const char* what, std::uint32_t a, std::uint32_t b) {
    std::ostringstream os;
    os << what << " (indices " << a << ", " << b << ")";
    return os.str();
}

}  // namespace

void Group::derive_identity_and_inverses() {
    const std::uint32_t n = order_;
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::uint32_t h = 0; h < n && ok; ++h)
            ok = table_[std::size_t{e} * n + h] == h && table_[std::size_t{h} * n + e] == h;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw GroupError(GroupDefect::no_identity, "table has no two-sided identity");

    inverse_.assign(n, 0);
    for (std::uint32_t g = 0; g < n; ++g) {
        bool ok = false;
        for (std::uint32_t h = 0; h < n; ++h) {
            if (table_[std::size_t{g} * n + h] == identity_ &&
                table_[std::size_t{h} * n + g] == identity_) {
                inverse_[g] = h;
                ok = true;
                break;
            }
        }
        if (!ok)
            throw GroupError(GroupDefect::missing_inverse,
                             "element " + std::to_string(g) + " has no two-sided inverse",
                             {g, 0, 0});
    }
}

std::string Group::element_label(std::uint32_t g) const {
    if (backend_ == GroupBackend::permutation)
        return Permutation::from_lehmer_rank(sym_degree_, g).to_cycle_string();
    if (g < labels_.size()) return labels_[g];
    return std::to_string(g);
}

std::uint32_t Group::perm_multiply(std::uint32_t a, std::uint32_t b) const {
    const auto pa = Permutation::from_lehmer_rank(sym_degree_, a);
    const auto pb = Permutation::from_lehmer_rank(sym_degree_, b);
    return static_cast<std::uint32_t>(pa.compose(pb).lehmer_rank());
}

std::uint32_t Group::perm_inverse(std::uint32_t g) const {
    return static_cast<std::uint32_t>(
        Permutation::from_lehmer_rank(sym_degree_, g).inverse().lehmer_rank());
}

Group build_cyclic(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("build_cyclic: order must be >= 1");
    if (m > Group::kDenseOrderLimit)
        throw GroupError(GroupDefect::unsupported_order,
                         "cyclic order exceeds dense-table limit");
    Group g;
    g.order_ = m;
    g.table_.resize(std::size_t{m} * m);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            g.table_[std::size_t{i} * m + j] = (i + j) % m;
    g.identity_ = 0;
    g.inverse_.resize(m);
    for (std::uint32_t i = 0; i < m; ++i) g.inverse_[i] = (m - i) % m;
    g.labels_.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) g.labels_.push_back(std::to_string(i));
    return g;
}

Group build_dihedral(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("build_dihedral: parameter must be >= 1");
    const std::uint64_t n64 = 2 * std::uint64_t{m};
    if (n64 > Group::kDenseOrderLimit)
        throw GroupError(GroupDefect::unsupported_order,
                         "dihedral order exceeds dense-table limit");
    const auto n = static_cast<std::uint32_t>(n64);
    Group g;
    g.order_ = n;
    g.table_.resize(std::size_t{n} * n);
    auto at = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t& {
        return g.table_[std::size_t{a} * n + b];
    };
    for (std::uint32_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < m; ++j) {
            at(i, j) = (i + j) % m;                    // x^i x^j = x^(i+j)
            at(i, m + j) = m + (j + m - i) % m;        // x^i (y x^j) = y x^(j-i)
            at(m + i, j) = m + (i + j) % m;            // (y x^i) x^j = y x^(i+j)
            at(m + i, m + j) = (j + m - i) % m;        // (y x^i)(y x^j) = x^(j-i)
        }
    }
    g.identity_ = 0;
    g.inverse_.resize(n);
    for (std::uint32_t i = 0; i < m; ++i) {
        g.inverse_[i] = (m - i) % m;  // rotations
        g.inverse_[m + i] = m + i;    // reflections are involutions
    }
    g.labels_.reserve(n);
    for (std::uint32_t i = 0; i < m; ++i) g.labels_.push_back("x^" + std::to_string(i));
    for (std::uint32_t i = 0; i < m; ++i) g.labels_.push_back("y x^" + std::to_string(i));
    return g;
}

Group build_symmetric(std::uint32_t m) {
    return build_symmetric(
        m, m <= 7 ? GroupBackend::dense_table : GroupBackend::permutation);
}

Group build_symmetric(std::uint32_t m, GroupBackend backend) {
    if (m < 1 || m > 10)
        throw std::domain_error("build_symmetric: degree must be in [1, 10]");
    const std::uint64_t n64 = factorial(m);
    Group g;
    g.sym_degree_ = m;
    if (backend == GroupBackend::permutation) {
        g.backend_ = GroupBackend::permutation;
        g.order_ = static_cast<std::uint32_t>(n64);
        g.identity_ = 0;
        return g;
    }
    if (n64 > Group::kDenseOrderLimit)
        throw GroupError(GroupDefect::unsupported_order,
                         "symmetric group too large for the dense backend");
    const auto n = static_cast<std::uint32_t>(n64);
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (std::uint32_t r = 0; r < n; ++r)
        perms.push_back(Permutation::from_lehmer_rank(m, r));
    g.order_ = n;
    g.table_.resize(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            g.table_[std::size_t{a} * n + b] =
                static_cast<std::uint32_t>(perms[a].compose(perms[b]).lehmer_rank());
    g.identity_ = 0;
    g.inverse_.resize(n);
    for (std::uint32_t r = 0; r < n; ++r)
        g.inverse_[r] = static_cast<std::uint32_t>(perms[r].inverse().lehmer_rank());
    g.labels_.reserve(n);
    for (std::uint32_t r = 0; r < n; ++r) g.labels_.push_back(perms[r].to_cycle_string());
    return g;
}

Group build_product(const Group& a, const Group& b) {
    const std::uint64_t n64 = std::uint64_t{a.order()} * b.order();
    if (n64 > Group::kDenseOrderLimit)
        throw GroupError(GroupDefect::unsupported_order,
                         "product order exceeds dense-table limit");
    const auto n = static_cast<std::uint32_t>(n64);
    const std::uint32_t nb = b.order();
    Group g;
    g.order_ = n;
    g.table_.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x) {
        const std::uint32_t xa = x / nb, xb = x % nb;
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::uint32_t ya = y / nb, yb = y % nb;
            g.table_[std::size_t{x} * n + y] =
                a.multiply(xa, ya) * nb + b.multiply(xb, yb);
        }
    }
    g.identity_ = a.identity() * nb + b.identity();
    g.inverse_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x)
        g.inverse_[x] = a.inverse(x / nb) * nb + b.inverse(x % nb);
    g.labels_.reserve(n);
    for (std::uint32_t x = 0; x < n; ++x)
        g.labels_.push_back("(" + a.element_label(x / nb) + ", " +
                            b.element_label(x % nb) + ")");
    return g;
}

Group load_table(std::istream& in) {
    std::int64_t n_signed = 0;
    if (!(in >> n_signed) || n_signed < 1)
        throw GroupError(GroupDefect::parse, "expected a positive group order on line 1");
    if (n_signed > Group::kDenseOrderLimit)
        throw GroupError(GroupDefect::unsupported_order,
                         "table order exceeds dense-table limit");
    const auto n = static_cast<std::uint32_t>(n_signed);

    Group g;
    g.order_ = n;
    g.table_.resize(std::size_t{n} * n);
    for (std::uint32_t row = 0; row < n; ++row) {
        for (std::uint32_t col = 0; col < n; ++col) {
            std::int64_t v = 0;
            if (!(in >> v))
                throw GroupError(GroupDefect::parse,
                                 format_witness("table truncated at entry", row, col),
                                 {row, col, 0});
            if (v < 0 || v >= n_signed)
                throw GroupError(GroupDefect::parse,
                                 format_witness("entry out of range at", row, col),
                                 {row, col, 0});
            g.table_[std::size_t{row} * n + col] = static_cast<std::uint32_t>(v);
        }
    }
    g.derive_identity_and_inverses();
    validate_group(g);
    return g;
}

Group load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw GroupError(GroupDefect::parse, "cannot open table file: " + path);
    return load_table(in);
}

void validate_group(const Group& g) {
    const std::uint32_t n = g.order();

    // Latin square: each row and each column is a permutation of [0, n).
    {
        std::vector<std::uint32_t> seen(n, n);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                const std::uint32_t v = g.multiply(a, b);
                if (seen[v] == a)
                    throw GroupError(GroupDefect::not_latin_square,
                                     format_witness("duplicate value in row", a, b),
                                     {a, b, v});
                seen[v] = a;
            }
        }
        std::fill(seen.begin(), seen.end(), n);
        for (std::uint32_t b = 0; b < n; ++b) {
            for (std::uint32_t a = 0; a < n; ++a) {
                const std::uint32_t v = g.multiply(a, b);
                if (seen[v] == b)
                    throw GroupError(GroupDefect::not_latin_square,
                                     format_witness("duplicate value in column", b, a),
                                     {a, b, v});
                seen[v] = b;
            }
        }
    }

    // Identity and inverses.
    const std::uint32_t e = g.identity();
    for (std::uint32_t a = 0; a < n; ++a) {
        if (g.multiply(e, a) != a || g.multiply(a, e) != a)
            throw GroupError(GroupDefect::no_identity,
                             format_witness("identity fails at", e, a), {e, a, 0});
        const std::uint32_t inv = g.inverse(a);
        if (g.multiply(a, inv) != e || g.multiply(inv, a) != e)
            throw GroupError(GroupDefect::missing_inverse,
                             format_witness("inverse fails at", a, inv), {a, inv, 0});
    }

    // Associativity: O(n^3) exhaustively for n <= 256; randomized triples
    // above that (a full check at n = 16384 would be ~4e12 products).
    auto check_triple = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
            throw GroupError(GroupDefect::not_associative,
                             "associativity fails at triple (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ", " + std::to_string(c) + ")",
                             {a, b, c});
    };
    if (n <= 256) {
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        RandomStream stream(0x76616c6964617465ULL, n, 0);  // fixed internal seed
        const std::uint64_t samples = 10 * std::uint64_t{n} * n;
        for (std::uint64_t s = 0; s < samples; ++s)
            check_triple(stream.uniform_below(n), stream.uniform_below(n),
                         stream.uniform_below(n));
    }
}

}  // namespace decomp
