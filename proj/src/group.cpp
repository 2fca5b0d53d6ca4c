#include "carleman/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "carleman/error.hpp"

namespace carleman {

void FiniteMatrixGroup::build_index() {
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

FiniteMatrixGroup FiniteMatrixGroup::close(const std::vector<RationalMatrix>& generators, std::size_t max_order) {
    if (generators.empty()) throw Error(ErrorKind::ParameterOutOfRange, "close_group needs at least one generator");
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators) {
        if (!g.is_square() || g.rows() != n) throw Error(ErrorKind::DimensionMismatch, "generators differ in size");
        if (g.determinant() == 0) throw Error(ErrorKind::SingularGenerator, "generator is singular:\n" + to_string(g));
    }
    FiniteMatrixGroup grp;
    grp.n_ = n;
    grp.generators_ = generators;
    grp.elements_.push_back(RationalMatrix::identity(n));
    grp.index_.emplace(grp.elements_.back(), 0);
    for (std::size_t next = 0; next < grp.elements_.size(); ++next) {
        for (const auto& g : generators) {
            RationalMatrix prod = g * grp.elements_[next];
            if (grp.index_.count(prod)) continue;
            if (grp.elements_.size() >= max_order) {
                throw Error(ErrorKind::OrderBoundExceeded,
                            "group order exceeds --max-order " + std::to_string(max_order));
            }
            grp.index_.emplace(prod, grp.elements_.size());
            grp.elements_.push_back(std::move(prod));
        }
    }
    return grp;
}

FiniteMatrixGroup FiniteMatrixGroup::trivial(std::size_t n) {
    FiniteMatrixGroup grp;
    grp.n_ = n;
    grp.elements_.push_back(RationalMatrix::identity(n));
    grp.build_index();
    return grp;
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(std::vector<RationalMatrix> elements) {
    if (elements.empty()) throw Error(ErrorKind::ParameterOutOfRange, "empty element list");
    FiniteMatrixGroup grp;
    grp.n_ = elements.front().rows();
    grp.elements_ = std::move(elements);
    grp.generators_ = grp.elements_;
    grp.build_index();
    if (grp.index_.size() != grp.elements_.size()) throw Error(ErrorKind::ParameterOutOfRange, "repeated element");
    if (!grp.contains(RationalMatrix::identity(grp.n_))) {
        throw Error(ErrorKind::ParameterOutOfRange, "element list lacks the identity");
    }
    for (const auto& a : grp.elements_)
        for (const auto& b : grp.elements_)
            if (!grp.contains(a * b)) throw Error(ErrorKind::ParameterOutOfRange, "element list is not closed");
    return grp;
}

std::size_t FiniteMatrixGroup::index_of(const RationalMatrix& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) throw Error(ErrorKind::IndexOutOfRange, "matrix is not a group element");
    return it->second;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t parse_count(std::string_view text, std::string_view spec) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(ErrorKind::ParseError, "bad group spec '" + std::string(spec) + "'");
    }
    std::size_t v = std::stoul(std::string(text));
    if (v == 0) throw Error(ErrorKind::ParameterOutOfRange, "group size must be positive in '" + std::string(spec) + "'");
    return v;
}

std::vector<std::size_t> parse_counts(std::string_view text, std::string_view spec) {
    std::vector<std::size_t> out;
    while (true) {
        auto comma = text.find(',');
        out.push_back(parse_count(text.substr(0, comma), spec));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

RationalMatrix transposition(std::size_t n, std::size_t i, std::size_t j) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[j]);
    return RationalMatrix::permutation(perm);
}

}  // namespace

std::vector<RationalMatrix> builtin_generators(std::string_view spec) {
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    if (head == "rot4" && colon == std::string_view::npos) {
        return {RationalMatrix(2, 2, {0, -1, 1, 0})};
    }
    if (colon == std::string_view::npos) throw Error(ErrorKind::ParseError, "bad group spec '" + std::string(spec) + "'");
    if (head == "trivial") return {RationalMatrix::identity(parse_count(arg, spec))};
    if (head == "sign") return {RationalMatrix::scalar(parse_count(arg, spec), -1)};
    if (head == "sym") {
        const std::size_t n = parse_count(arg, spec);
        if (n == 1) return {RationalMatrix::identity(1)};
        std::vector<RationalMatrix> gens;
        for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i, i + 1));
        return gens;
    }
    if (head == "cyclic") {
        const std::size_t n = parse_count(arg, spec);
        std::vector<std::size_t> perm(n);
        for (std::size_t j = 0; j < n; ++j) perm[j] = (j + 1) % n;
        return {RationalMatrix::permutation(perm)};
    }
    if (head == "blocks") {
        auto sizes = parse_counts(arg, spec);
        const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
        std::vector<RationalMatrix> gens;
        std::size_t offset = 0;
        for (std::size_t s : sizes) {
            for (std::size_t i = 0; i + 1 < s; ++i) gens.push_back(transposition(n, offset + i, offset + i + 1));
            offset += s;
        }
        if (gens.empty()) gens.push_back(RationalMatrix::identity(n));
        return gens;
    }
    throw Error(ErrorKind::ParseError, "unknown group family '" + std::string(head) + "'");
}

FiniteMatrixGroup builtin_group(std::string_view spec, std::size_t max_order) {
    return FiniteMatrixGroup::close(builtin_generators(spec), max_order);
}

std::vector<RationalMatrix> block_permutations(const std::vector<std::size_t>& block_sizes) {
    const std::size_t n = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    std::vector<std::vector<std::vector<std::size_t>>> per_block;
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        std::vector<std::size_t> word(s);
        std::iota(word.begin(), word.end(), offset);
        std::vector<std::vector<std::size_t>> words;
        do {
            words.push_back(word);
        } while (std::next_permutation(word.begin(), word.end()));
        per_block.push_back(std::move(words));
        offset += s;
    }
    std::vector<RationalMatrix> out;
    std::vector<std::size_t> choice(per_block.size(), 0);
    while (true) {
        std::vector<std::size_t> perm;
        perm.reserve(n);
        for (std::size_t b = 0; b < per_block.size(); ++b)
            perm.insert(perm.end(), per_block[b][choice[b]].begin(), per_block[b][choice[b]].end());
        out.push_back(RationalMatrix::permutation(perm));
        // odometer with the first block most significant
        std::size_t b = per_block.size();
        while (b > 0) {
            --b;
            if (++choice[b] < per_block[b].size()) break;
            choice[b] = 0;
            if (b == 0) return out;
        }
        if (per_block.empty()) return out;
    }
}

nlohmann::json to_json(const RationalMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "matrix must be a non-empty list of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) throw Error(ErrorKind::ParseError, "matrix rows must be non-empty lists");
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw Error(ErrorKind::ParseError, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = j[r][c];
            if (e.is_string()) m(r, c) = parse_rational(e.get<std::string>());
            else if (e.is_number_integer()) m(r, c) = Rational(e.get<long>());
            else throw Error(ErrorKind::ParseError, "matrix entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

std::vector<RationalMatrix> matrices_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw Error(ErrorKind::ParseError, "expected a non-empty list of matrices");
    std::vector<RationalMatrix> out;
    for (const auto& m : j) out.push_back(matrix_from_json(m));
    return out;
}

}  // namespace carleman
