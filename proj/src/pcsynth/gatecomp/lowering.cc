// Copyright 2026 The pcsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsynth/gatecomp/lowering.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

namespace {

// Factors this close to the identity are not emitted.
constexpr double kIdentityTol = 1e-12;

bool near_identity(const Payload &u) {
    return std::abs(u[0] - 1.0) <= kIdentityTol && std::abs(u[1]) <= kIdentityTol && std::abs(u[2]) <= kIdentityTol &&
           std::abs(u[3] - 1.0) <= kIdentityTol;
}

int local_bit(size_t index, size_t width, size_t p) {
    return static_cast<int>((index >> (width - 1 - p)) & 1);
}

std::vector<Control> with_conditions(std::vector<Control> controls, std::span<const WireCondition> conditions) {
    for (const auto &c : conditions) {
        controls.push_back({c.wire, c.value});
    }
    return controls;
}

class Fnv {
   public:
    void bytes(const void *p, size_t n) {
        auto *b = static_cast<const unsigned char *>(p);
        for (size_t k = 0; k < n; k++) {
            h_ ^= b[k];
            h_ *= 0x100000001b3ULL;
        }
    }
    void u64(uint64_t v) {
        bytes(&v, sizeof v);
    }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }
    void str(const std::string &s) {
        u64(s.size());
        bytes(s.data(), s.size());
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

   private:
    uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace

CMatrix pcsynth::factor_matrix(const TwoLevelFactor &f, size_t n) {
    CMatrix m = CMatrix::identity(n);
    if (f.kind == TwoLevelFactor::Kind::Phase) {
        m(f.i, f.i) = f.phase;
        return m;
    }
    m(f.i, f.i) = f.u[0];
    m(f.i, f.j) = f.u[1];
    m(f.j, f.i) = f.u[2];
    m(f.j, f.j) = f.u[3];
    return m;
}

std::vector<TwoLevelFactor> pcsynth::two_level_decompose(const CMatrix &u) {
    if (!u.is_square() || unitarity_error(u) > 1e-9) {
        throw InputError("two_level_decompose: input is not unitary");
    }
    size_t n = u.rows();
    CMatrix w = u;
    std::vector<TwoLevelFactor> factors;
    // Left-multiply by g_(t,l) to zero w(l, t); then U = g_1^dagger g_2^dagger ... D.
    for (size_t t = 0; t + 1 < n; t++) {
        for (size_t l = t + 1; l < n; l++) {
            Complex a = w(t, t);
            Complex b = w(l, t);
            if (b == Complex(0)) {
                continue;
            }
            double r = std::hypot(std::abs(a), std::abs(b));
            Complex g00 = std::conj(a) / r;
            Complex g01 = std::conj(b) / r;
            Complex g10 = -b / r;
            Complex g11 = a / r;
            for (size_t c = 0; c < n; c++) {
                Complex x = w(t, c);
                Complex y = w(l, c);
                w(t, c) = g00 * x + g01 * y;
                w(l, c) = g10 * x + g11 * y;
            }
            w(l, t) = 0;
            TwoLevelFactor f;
            f.kind = TwoLevelFactor::Kind::Pair;
            f.i = t;
            f.j = l;
            f.u = {std::conj(g00), std::conj(g10), std::conj(g01), std::conj(g11)};
            if (!near_identity(f.u)) {
                factors.push_back(f);
            }
        }
    }
    for (size_t k = 0; k < n; k++) {
        Complex p = w(k, k);
        if (std::abs(p - 1.0) > kIdentityTol) {
            TwoLevelFactor f;
            f.kind = TwoLevelFactor::Kind::Phase;
            f.i = k;
            f.j = k;
            f.phase = p / std::abs(p);
            factors.push_back(f);
        }
    }
    return factors;
}

std::vector<Gate> pcsynth::pair_network(size_t i, size_t j, const Payload &u, std::span<const size_t> wires,
                                        std::span<const WireCondition> conditions, bool *roles_swapped) {
    size_t width = wires.size();
    if (i == j) {
        throw InputError("pair_network: indices must differ");
    }
    if (width == 0 || width >= 64 || i >> width != 0 || j >> width != 0) {
        throw InputError("pair_network: index out of range for the wire count");
    }
    size_t diff = i ^ j;
    size_t k = 0;
    while (local_bit(diff, width, k) == 0) {
        k++;
    }
    bool swapped = local_bit(i, width, k) == 0;
    if (roles_swapped) {
        *roles_swapped = swapped;
    }
    size_t lo = swapped ? i : j;
    // Payload in (lo, hi) order.
    Payload p = swapped ? u : Payload{u[3], u[2], u[1], u[0]};

    std::vector<Gate> out;
    std::vector<size_t> flipped;
    for (size_t b = 0; b < width; b++) {
        if (b != k && local_bit(diff, width, b)) {
            flipped.push_back(b);
            out.push_back(make_controlled(wires[b], {{wires[k], 1}}, kPauliX));
        }
    }
    std::vector<Control> controls;
    for (size_t b = 0; b < width; b++) {
        if (b != k) {
            controls.push_back({wires[b], local_bit(lo, width, b)});
        }
    }
    out.push_back(make_controlled(wires[k], with_conditions(std::move(controls), conditions), p));
    for (size_t f = flipped.size(); f-- > 0;) {
        out.push_back(make_controlled(wires[flipped[f]], {{wires[k], 1}}, kPauliX));
    }
    return out;
}

Gate pcsynth::phase_gate(size_t k, Complex phase, std::span<const size_t> wires,
                         std::span<const WireCondition> conditions) {
    size_t width = wires.size();
    std::vector<Control> controls;
    for (size_t b = 0; b + 1 < width; b++) {
        controls.push_back({wires[b], local_bit(k, width, b)});
    }
    Payload p = local_bit(k, width, width - 1) ? Payload{1, 0, 0, phase} : Payload{phase, 0, 0, 1};
    return make_controlled(wires[width - 1], with_conditions(std::move(controls), conditions), p);
}

std::vector<Gate> pcsynth::s_block_netlist(std::span<const double> weights, std::span<const size_t> register_wires,
                                           size_t probe, std::span<const WireCondition> conditions) {
    size_t width = register_wires.size();
    if (weights.size() > (size_t{1} << width)) {
        throw InputError("s_block_netlist: more weights than register patterns");
    }
    std::vector<Gate> out;
    for (size_t a = 0; a < weights.size(); a++) {
        double m = weights[a];
        if (!(m >= 0 && m <= 1)) {
            std::ostringstream msg;
            msg << "s_block_netlist: weight " << a << " = " << m << " is outside [0, 1]";
            throw InputError(msg.str());
        }
        double f = std::sqrt(1 - m);
        double e = std::sqrt(m);
        Payload k{f, -e, e, f};
        if (near_identity(k)) {
            continue;
        }
        std::vector<Control> controls;
        for (size_t b = 0; b < width; b++) {
            controls.push_back({register_wires[b], local_bit(a, width, b)});
        }
        out.push_back(make_controlled(probe, with_conditions(std::move(controls), conditions), k));
    }
    return out;
}

std::vector<Gate> pcsynth::lower_unitary(const CMatrix &u, std::span<const size_t> wires,
                                         std::span<const WireCondition> conditions, size_t *swaps, size_t *factors) {
    auto fs = two_level_decompose(u);
    if (factors) {
        *factors = fs.size();
    }
    size_t swap_count = 0;
    std::vector<Gate> out;
    // F_1 ... F_m = U, so F_m is applied first.
    for (size_t k = fs.size(); k-- > 0;) {
        const auto &f = fs[k];
        if (f.kind == TwoLevelFactor::Kind::Phase) {
            out.push_back(phase_gate(f.i, f.phase, wires, conditions));
            continue;
        }
        bool swapped = false;
        auto gates = pair_network(f.i, f.j, f.u, wires, conditions, &swapped);
        swap_count += swapped ? 1 : 0;
        out.insert(out.end(), gates.begin(), gates.end());
    }
    if (swaps) {
        *swaps = swap_count;
    }
    return out;
}

std::string pcsynth::plan_hash(const CircuitPlan &plan) {
    Fnv h;
    h.u64(static_cast<uint64_t>(plan.mode));
    h.u64(plan.qubits);
    h.u64(plan.registers);
    h.u64(plan.copies_in);
    h.u64(plan.copies_out);
    h.u64(static_cast<uint64_t>(plan.probe_success));
    h.u64(plan.steps.size());
    for (const auto &s : plan.steps) {
        h.u64(static_cast<uint64_t>(s.kind));
        h.str(s.label);
        h.u64(s.targets.size());
        for (size_t t : s.targets) {
            h.u64(t);
        }
        h.u64(s.conditions.size());
        for (const auto &c : s.conditions) {
            h.u64(c.wire);
            h.u64(static_cast<uint64_t>(c.value));
        }
        h.u64(s.matrix.rows());
        for (Complex z : s.matrix.data()) {
            h.f64(z.real());
            h.f64(z.imag());
        }
        h.u64(s.weights.size());
        for (double m : s.weights) {
            h.f64(m);
        }
    }
    return h.hex();
}

GateNetlist pcsynth::lower_plan(const CircuitPlan &plan) {
    validate_plan(plan);
    GateNetlist out;
    out.wires = plan.wires();
    out.probe = plan.probe();
    out.source_hash = plan_hash(plan);
    for (size_t s = 0; s < plan.steps.size(); s++) {
        const auto &step = plan.steps[s];
        std::vector<Gate> gates;
        std::ostringstream note;
        note << "step " << s << " " << step.label;
        switch (step.kind) {
            case StepKind::PauliX:
                gates.push_back(make_controlled(step.targets[0], with_conditions({}, step.conditions), kPauliX));
                break;
            case StepKind::SBlock: {
                std::span<const size_t> reg(step.targets.data(), step.targets.size() - 1);
                gates = s_block_netlist(step.weights, reg, step.targets.back(), step.conditions);
                break;
            }
            case StepKind::Unitary: {
                size_t swaps = 0;
                size_t factors = 0;
                gates = lower_unitary(step.matrix, step.targets, step.conditions, &swaps, &factors);
                note << ": " << factors << " two-level factors";
                if (swaps > 0) {
                    note << ", " << swaps << " pair networks with i and j roles swapped";
                }
                break;
            }
        }
        if (gates.empty()) {
            out.trailing_notes.push_back(note.str() + " (identity, no gates)");
            continue;
        }
        // Notes for identity steps that precede this one move onto its first gate.
        gates.front().notes = std::move(out.trailing_notes);
        out.trailing_notes.clear();
        gates.front().notes.push_back(note.str());
        out.gates.insert(out.gates.end(), gates.begin(), gates.end());
    }
    return out;
}
