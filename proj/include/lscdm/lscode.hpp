#ifndef LSCDM_LSCODE_HPP
#define LSCDM_LSCODE_HPP

#include <string>
#include <vector>

#include "lscdm/golay.hpp"

namespace lscdm {

enum class Family { base, mate };

struct CodeId {
    int layer = 0;
    int node = 0;
    Family family = Family::base;
    bool operator==(const CodeId&) const = default;
};

std::string to_string(const CodeId& id);

// Ternary LS code: C-part, zero gap, S-part, trailing zero gap.
struct LsCode {
    Seq c_part;
    Seq s_part;
    long long gap = 0;
    long long trailing_gap = 0;
    Seq chips;  // c_part | 0^gap | s_part | 0^trailing_gap
    CodeId id;

    std::size_t part_length() const { return c_part.size(); }
};

// Binary tree of Golay pairs. Node (layer l, index i) holds a base-family
// pair of length N0*2^l and a mate-family pair. Both families double the
// same way, each appending its own mate with the node's sign:
// child0 = (X | mate(X)), child1 = (X | -mate(X)); at the root the mate
// family is mate(seed). Every pair at every layer stays complementary.
class LsCodeTree {
public:
    LsCodeTree(GolayPair seed, int depth, std::size_t max_length = 1u << 20);

    int depth() const { return depth_; }
    std::size_t seed_length() const { return seed_length_; }
    std::size_t nodes_at(int layer) const;
    const GolayPair& base(int layer, int node) const;
    const GolayPair& mate_of(int layer, int node) const;
    const GolayPair& pair(const CodeId& id) const;

private:
    int depth_;
    std::size_t seed_length_;
    std::vector<std::vector<GolayPair>> bases_;  // [layer][node]
    std::vector<std::vector<GolayPair>> mates_;
};

struct LsCodeSet {
    std::vector<LsCode> codes;
    std::size_t seed_length = 0;
};

LsCodeTree expand(const GolayPair& seed, int depth,
                  std::size_t max_length = 1u << 20);

LsCode assemble(Seq c_part, Seq s_part, long long gap, long long trailing_gap,
                CodeId id = {});

// All 2*2^layer codes of one layer (base + mate per node), shared gaps.
LsCodeSet code_set(const LsCodeTree& tree, int layer, long long gap,
                   long long trailing_gap);

// Lower bound on the interference-free window between two codes of the
// same layer. Same code: the gap alone. Same family: min(gap, sub-code
// length at the deepest common ancestor). Across families the window is
// bounded by the seed length once the tree is expanded; the depth-0
// base/mate pair is a true mate pair, limited by the gap alone.
long long predicted_ifw(const LsCodeTree& tree, const CodeId& a,
                        const CodeId& b, long long gap);

}  // namespace lscdm

#endif
