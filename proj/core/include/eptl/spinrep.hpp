#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "eptl/diagrams.hpp"
#include "eptl/matrix.hpp"

namespace eptl {

// Sector S^z = d/2 of N spins; bit (s-1) set means spin up at site s.
class SpinIndex {
public:
    SpinIndex(int N, int d);
    int n_sites() const { return N_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(configs_.size()); }
    std::uint32_t config(int k) const { return configs_[k]; }
    const std::vector<std::uint32_t>& configs() const { return configs_; }
    // -1 if the mask is not in the sector.
    int index(std::uint32_t mask) const;
    std::vector<std::string> labels() const;

private:
    int N_;
    int d_;
    std::vector<std::uint32_t> configs_;
    std::vector<int> lookup_;
};

std::string spin_label(std::uint32_t mask, int N);
std::uint32_t parse_spin_label(const std::string& s);

RingMatrix ebar_matrix(int i, const SpinIndex& sec);
RingMatrix omegabar_matrix(int sign, const SpinIndex& sec);
RingMatrix tau_generator(const Generator& g, const SpinIndex& sec);
RingMatrix tau_word(const Word& w, const SpinIndex& sec);
RingMatrix spin_hamiltonian(const SpinIndex& sec);

// Sparse vector on the full spin space.
struct SpinVector {
    int N = 0;
    std::map<std::uint32_t, LaurentPoly> coords;

    static SpinVector vacuum(int N);
    SpinVector& operator+=(const SpinVector& o);
    friend bool operator==(const SpinVector& a, const SpinVector& b);
    std::vector<LaurentPoly> dense(const SpinIndex& sec) const;
};

SpinVector ebar_apply(int i, const SpinVector& x);
SpinVector omegabar_apply(int sign, const SpinVector& x);

}  // namespace eptl
