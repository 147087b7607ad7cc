#pragma once

#include <string>
#include <utility>
#include <vector>

namespace eptl {

// Periodic link pattern on N sites. Arc (i, j) has 1 <= i <= N and i+1 <= j <= N+i-1;
// j > N marks an arc crossing the seam between N and 1.
class LinkState {
public:
    LinkState() = default;
    // offsets[s-1] is the lifted displacement from site s to its partner, 0 for a defect.
    LinkState(int N, std::vector<int> offsets);

    static LinkState from_arcs(int N, const std::vector<std::pair<int, int>>& arcs);

    int n_sites() const { return N_; }
    int n_defects() const { return static_cast<int>(defects_.size()); }
    // Number of arcs crossing the seam.
    int r() const;
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& defects() const { return defects_; }
    // Lifted offset of site s (1-based), 0 for a defect.
    int offset(int s) const { return offsets_[s - 1]; }
    bool is_defect(int s) const { return offsets_[s - 1] == 0; }
    const std::vector<int>& offsets() const { return offsets_; }

    std::string str() const;
    std::string ascii() const;

    friend bool operator==(const LinkState& a, const LinkState& b) {
        return a.N_ == b.N_ && a.offsets_ == b.offsets_;
    }
    friend bool operator!=(const LinkState& a, const LinkState& b) { return !(a == b); }
    friend bool operator<(const LinkState& a, const LinkState& b);

private:
    int N_ = 0;
    std::vector<int> offsets_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> defects_;
};

// Checks the cylinder constraints; returns an empty string when valid.
std::string validate_offsets(int N, const std::vector<int>& offsets);

// Basis of the d-defect module, sorted by r then lexicographically on the arc list.
std::vector<LinkState> enumerate_states(int N, int d);
// Subset with no seam-crossing arcs.
std::vector<LinkState> enumerate_open_states(int N, int d);
// Index of a state within a basis, -1 if absent.
int index_of(const std::vector<LinkState>& basis, const LinkState& w);

long long binom(int n, int k);
// dim of the irreducible open module: binom(N,(N-d)/2) - binom(N,(N-d)/2-1).
long long dim_open(int N, int d);

// Replace every seam-crossing arc by two defects.
LinkState bijection_C(const LinkState& w);
// Reattach the outermost defects pairwise across the seam.
LinkState bijection_C_inverse(const LinkState& c, int r);

struct PathData {
    std::vector<int> plus;
    std::vector<int> minus;
    int H_plus = 0;
    int H_minus = 0;
};

int height(const std::vector<int>& steps);
PathData paths_and_height(const LinkState& w);
// Sum of (j - i) over arcs.
int arc_length_sum(const LinkState& w);

}  // namespace eptl
