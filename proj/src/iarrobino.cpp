#include "bnhilb/iarrobino.hpp"

namespace bnhilb {

BetaDims beta_dims(const HSType& type) {
    const JumpVector jv = jumping_indices(type);
    long long pairs = 0, squares = 0;
    for (auto& [j, ej] : jv.shape) {
        pairs += ej * (ej - 1) / 2;
        squares += ej * ej;
    }
    BetaDims dims;
    dims.n_t = type.n - type.d - pairs;
    dims.n_e = (type.d * type.d - squares) / 2;
    return dims;
}

long long column_block_label(const NormalPattern& p, long long j) {
    if (j < 1 || j > p.d) throw domain_error("pattern: column index out of range");
    return p.k[static_cast<std::size_t>(j - 1)] + j;
}

bool same_block(const NormalPattern& p, long long i, long long j) {
    return column_block_label(p, i) == column_block_label(p, j);
}

std::vector<long long> pattern_block_sizes(const NormalPattern& p) {
    std::vector<long long> sizes;
    for (long long j = 1; j <= p.d; ++j) {
        if (j > 1 && same_block(p, j - 1, j))
            ++sizes.back();
        else
            sizes.push_back(1);
    }
    return sizes;
}

std::vector<BetaSlot> beta_slots(const NormalPattern& p) {
    std::vector<BetaSlot> slots;
    for (long long j = 1; j <= p.d; ++j) {
        const long long gap = p.k[static_cast<std::size_t>(j - 1)] -
                              (j < p.d ? p.k[static_cast<std::size_t>(j)] : 0);
        for (long long i = 1; i <= j; ++i)
            for (int deg = 0; deg < gap; ++deg) {
                if (deg == 0 && same_block(p, i, j)) continue;
                slots.push_back({i, j, deg});
            }
    }
    return slots;
}

}  // namespace bnhilb
