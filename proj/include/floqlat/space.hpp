#pragma once

#include <string>
#include <vector>

#include "floqlat/types.hpp"

namespace floqlat {

enum class SubsystemKind { boson, qubit };

struct SubsystemSpec {
    SubsystemKind kind = SubsystemKind::boson;
    int dim = 3; // boson truncation; qubits always 2
    std::string label;

    static SubsystemSpec boson_mode(int dim, std::string label = {}) {
        return {SubsystemKind::boson, dim, std::move(label)};
    }
    static SubsystemSpec qubit(std::string label = {}) {
        return {SubsystemKind::qubit, 2, std::move(label)};
    }
};

// Ordered tensor-product space. Subsystem 0 varies slowest in the basis
// index: index = sum_k n_k * stride_k with stride_k = prod_{j>k} dim_j.
struct SpaceDescriptor {
    std::vector<SubsystemSpec> subsystems;
    std::vector<int> strides;
    int total_dim = 0;

    int size() const { return static_cast<int>(subsystems.size()); }
    int basis_index(const std::vector<int>& occupations) const;
};

SpaceDescriptor build_space(const std::vector<SubsystemSpec>& subsystems);

struct Operator {
    SpaceDescriptor space;
    cxmat matrix;

    double hermiticity_defect() const; // max |M - M^dagger| entry
};

enum class ModeOp { lower, raise, number, sigma_z, sigma_plus, sigma_minus };

// Single-subsystem operator embedded in the full space (identity elsewhere).
Operator mode_operator(const SpaceDescriptor& space, int index, ModeOp kind);

// sum_i b_i^dag b_i + sum_q (sigma_z + 1)/2
Operator total_excitation(const SpaceDescriptor& space);

// |occupations><occupations|
Operator basis_projector(const SpaceDescriptor& space, const std::vector<int>& occupations);

cxvec basis_state(const SpaceDescriptor& space, const std::vector<int>& occupations);

} // namespace floqlat
