#include "lscdm/lscode.hpp"

#include <stdexcept>

namespace lscdm {

std::string to_string(const CodeId& id) {
    return "L" + std::to_string(id.layer) + ".N" + std::to_string(id.node) +
           (id.family == Family::base ? ".base" : ".mate");
}

LsCodeTree::LsCodeTree(GolayPair seed, int depth, std::size_t max_length)
    : depth_(depth), seed_length_(seed.length()) {
    if (depth < 0) throw std::invalid_argument("expand: depth must be >= 0");
    if (depth > 8) throw std::invalid_argument("expand: depth > 8");
    if (seed_length_ == 0) throw std::invalid_argument("expand: empty seed");
    if (seed.c.size() != seed.s.size())
        throw std::invalid_argument("expand: seed part lengths differ");
    if (seed_length_ << depth > max_length)
        throw std::length_error("expand: leaf code length exceeds maximum");

    // Both families follow the same doubling, each appending its own mate
    // with the same sign row: child0 = (X | mate(X)), child1 = (X | -mate(X)).
    // This keeps every pair at every layer complementary and every code
    // set orthogonal at lag zero; appending the pair itself instead would
    // break complementarity at lag N0.
    bases_.resize(depth + 1);
    mates_.resize(depth + 1);
    mates_[0].push_back(mate(seed));
    bases_[0].push_back(std::move(seed));
    const auto grow = [](const std::vector<GolayPair>& parents,
                         std::vector<GolayPair>& children) {
        children.reserve(parents.size() * 2);
        for (const GolayPair& p : parents) {
            const GolayPair m = mate(p);
            GolayPair c0 = p, c1 = p;
            c0.c.insert(c0.c.end(), m.c.begin(), m.c.end());
            c0.s.insert(c0.s.end(), m.s.begin(), m.s.end());
            for (int v : m.c) c1.c.push_back(-v);
            for (int v : m.s) c1.s.push_back(-v);
            children.push_back(std::move(c0));
            children.push_back(std::move(c1));
        }
    };
    for (int l = 1; l <= depth; ++l) {
        grow(bases_[l - 1], bases_[l]);
        grow(mates_[l - 1], mates_[l]);
    }
}

std::size_t LsCodeTree::nodes_at(int layer) const {
    if (layer < 0 || layer > depth_)
        throw std::out_of_range("LsCodeTree: layer out of range");
    return bases_[layer].size();
}

const GolayPair& LsCodeTree::base(int layer, int node) const {
    nodes_at(layer);
    if (node < 0 || static_cast<std::size_t>(node) >= bases_[layer].size())
        throw std::out_of_range("LsCodeTree: node out of range");
    return bases_[layer][node];
}

const GolayPair& LsCodeTree::mate_of(int layer, int node) const {
    base(layer, node);
    return mates_[layer][node];
}

const GolayPair& LsCodeTree::pair(const CodeId& id) const {
    return id.family == Family::base ? base(id.layer, id.node)
                                     : mate_of(id.layer, id.node);
}

LsCodeTree expand(const GolayPair& seed, int depth, std::size_t max_length) {
    return LsCodeTree(seed, depth, max_length);
}

LsCode assemble(Seq c_part, Seq s_part, long long gap, long long trailing_gap,
                CodeId id) {
    if (c_part.size() != s_part.size())
        throw std::invalid_argument("assemble: part lengths differ");
    if (gap < 0 || trailing_gap < 0)
        throw std::invalid_argument("assemble: gaps must be >= 0");
    LsCode code;
    code.chips.reserve(2 * c_part.size() + gap + trailing_gap);
    code.chips.insert(code.chips.end(), c_part.begin(), c_part.end());
    code.chips.insert(code.chips.end(), gap, 0);
    code.chips.insert(code.chips.end(), s_part.begin(), s_part.end());
    code.chips.insert(code.chips.end(), trailing_gap, 0);
    code.c_part = std::move(c_part);
    code.s_part = std::move(s_part);
    code.gap = gap;
    code.trailing_gap = trailing_gap;
    code.id = id;
    return code;
}

LsCodeSet code_set(const LsCodeTree& tree, int layer, long long gap,
                   long long trailing_gap) {
    LsCodeSet set;
    set.seed_length = tree.seed_length();
    const std::size_t nodes = tree.nodes_at(layer);
    set.codes.reserve(2 * nodes);
    for (std::size_t n = 0; n < nodes; ++n) {
        const int node = static_cast<int>(n);
        const GolayPair& b = tree.base(layer, node);
        const GolayPair& m = tree.mate_of(layer, node);
        set.codes.push_back(assemble(b.c, b.s, gap, trailing_gap,
                                     {layer, node, Family::base}));
        set.codes.push_back(assemble(m.c, m.s, gap, trailing_gap,
                                     {layer, node, Family::mate}));
    }
    return set;
}

long long predicted_ifw(const LsCodeTree& tree, const CodeId& a,
                        const CodeId& b, long long gap) {
    tree.pair(a);
    tree.pair(b);
    if (a.layer != b.layer)
        throw std::invalid_argument("predicted_ifw: codes from different layers");
    const long long n0 = static_cast<long long>(tree.seed_length());
    if (a == b) return gap;  // autocorrelation: complementary parts
    if (a.family != b.family)
        // Cross-family windows are bounded by the seed length once the
        // tree has been expanded; the depth-0 pair is a true mate pair
        // (zero cross-correlation at every lag).
        return a.layer == 0 ? gap : std::min(gap, n0);
    // Same family: deepest common ancestor, found by stripping layers
    // until the node indices agree.
    int up = 1;
    while ((a.node >> up) != (b.node >> up)) ++up;
    return std::min(gap, n0 << (a.layer - up));
}

}  // namespace lscdm
