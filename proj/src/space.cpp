#include "floqlat/space.hpp"

#include <cmath>
#include <stdexcept>

namespace floqlat {

int SpaceDescriptor::basis_index(const std::vector<int>& occupations) const {
    if (occupations.size() != subsystems.size())
        throw std::invalid_argument("occupation list length does not match subsystem count");
    int idx = 0;
    for (size_t k = 0; k < occupations.size(); ++k) {
        if (occupations[k] < 0 || occupations[k] >= subsystems[k].dim)
            throw std::invalid_argument("occupation out of range for subsystem " + std::to_string(k));
        idx += occupations[k] * strides[k];
    }
    return idx;
}

SpaceDescriptor build_space(const std::vector<SubsystemSpec>& subsystems) {
    if (subsystems.empty())
        throw std::invalid_argument("build_space: empty subsystem sequence");
    SpaceDescriptor sp;
    sp.subsystems = subsystems;
    sp.total_dim = 1;
    for (const auto& s : subsystems) {
        if (s.dim < 2)
            throw std::invalid_argument("build_space: subsystem dim must be >= 2");
        if (s.kind == SubsystemKind::qubit && s.dim != 2)
            throw std::invalid_argument("build_space: qubit dim must be 2");
        sp.total_dim *= s.dim;
    }
    sp.strides.resize(subsystems.size());
    int stride = 1;
    for (int k = static_cast<int>(subsystems.size()) - 1; k >= 0; --k) {
        sp.strides[k] = stride;
        stride *= subsystems[k].dim;
    }
    return sp;
}

double Operator::hermiticity_defect() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

cxmat local_matrix(const SubsystemSpec& sub, ModeOp kind) {
    const int d = sub.dim;
    cxmat m = cxmat::Zero(d, d);
    const bool is_boson = sub.kind == SubsystemKind::boson;
    switch (kind) {
    case ModeOp::lower:
        if (!is_boson) throw std::invalid_argument("ladder operator requested on a qubit");
        for (int n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(double(n));
        break;
    case ModeOp::raise:
        if (!is_boson) throw std::invalid_argument("ladder operator requested on a qubit");
        for (int n = 1; n < d; ++n) m(n, n - 1) = std::sqrt(double(n));
        break;
    case ModeOp::number:
        if (!is_boson) throw std::invalid_argument("number operator requested on a qubit");
        for (int n = 0; n < d; ++n) m(n, n) = double(n);
        break;
    case ModeOp::sigma_z:
        if (is_boson) throw std::invalid_argument("sigma operator requested on a boson");
        m(0, 0) = -1.0; // |g>
        m(1, 1) = 1.0;  // |e>
        break;
    case ModeOp::sigma_plus:
        if (is_boson) throw std::invalid_argument("sigma operator requested on a boson");
        m(1, 0) = 1.0; // |e><g|
        break;
    case ModeOp::sigma_minus:
        if (is_boson) throw std::invalid_argument("sigma operator requested on a boson");
        m(0, 1) = 1.0; // |g><e|
        break;
    }
    return m;
}

// Embed a local d x d matrix at subsystem `index` with identities elsewhere.
cxmat embed(const SpaceDescriptor& sp, int index, const cxmat& local) {
    const int d = sp.subsystems[index].dim;
    const int stride = sp.strides[index];
    const int n = sp.total_dim;
    cxmat out = cxmat::Zero(n, n);
    // Iterate over all basis indices; rows/cols differing only in the target
    // subsystem's digit are coupled by the local matrix.
    const int outer = n / (d * stride); // combined dim of slower subsystems
    for (int o = 0; o < outer; ++o) {
        for (int s = 0; s < stride; ++s) {
            const int base = o * d * stride + s;
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) {
                    const complexd v = local(a, b);
                    if (v != complexd(0.0, 0.0))
                        out(base + a * stride, base + b * stride) = v;
                }
        }
    }
    return out;
}

} // namespace

Operator mode_operator(const SpaceDescriptor& space, int index, ModeOp kind) {
    if (index < 0 || index >= space.size())
        throw std::invalid_argument("mode_operator: subsystem index out of range");
    return Operator{space, embed(space, index, local_matrix(space.subsystems[index], kind))};
}

Operator total_excitation(const SpaceDescriptor& space) {
    cxmat m = cxmat::Zero(space.total_dim, space.total_dim);
    for (int k = 0; k < space.size(); ++k) {
        if (space.subsystems[k].kind == SubsystemKind::boson) {
            m += mode_operator(space, k, ModeOp::number).matrix;
        } else {
            m += 0.5 * (mode_operator(space, k, ModeOp::sigma_z).matrix
                        + cxmat::Identity(space.total_dim, space.total_dim));
        }
    }
    return Operator{space, std::move(m)};
}

cxvec basis_state(const SpaceDescriptor& space, const std::vector<int>& occupations) {
    cxvec v = cxvec::Zero(space.total_dim);
    v[space.basis_index(occupations)] = 1.0;
    return v;
}

Operator basis_projector(const SpaceDescriptor& space, const std::vector<int>& occupations) {
    cxmat m = cxmat::Zero(space.total_dim, space.total_dim);
    const int i = space.basis_index(occupations);
    m(i, i) = 1.0;
    return Operator{space, std::move(m)};
}

} // namespace floqlat
