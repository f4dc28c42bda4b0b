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

#include "pcsynth/gatecomp/netlist.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "pcsynth/error.h"

using namespace pcsynth;

namespace {

constexpr double kPayloadTol = 1e-10;

size_t wire_mask(size_t wires, size_t wire) {
    return size_t{1} << (wires - 1 - wire);
}

double payload_unitarity_error(const Payload &u) {
    // |U^dagger U - I| entrywise.
    Complex a = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2] - 1.0;
    Complex b = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    Complex c = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3] - 1.0;
    return std::max({std::abs(a), std::abs(b), std::abs(c)});
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(Complex z) {
    return fmt_double(z.real()) + "," + fmt_double(z.imag());
}

// Masks selecting the control pattern of a gate.
struct GateMasks {
    size_t target = 0;
    size_t ctrl = 0;
    size_t ctrl_value = 0;
    size_t free = 0;
};

GateMasks masks_for(const Gate &g, size_t wires) {
    GateMasks m;
    m.target = wire_mask(wires, g.target);
    for (const auto &c : g.controls) {
        size_t bit = wire_mask(wires, c.wire);
        m.ctrl |= bit;
        if (c.polarity) {
            m.ctrl_value |= bit;
        }
    }
    size_t all = (wires == 64 ? ~size_t{0} : (size_t{1} << wires) - 1);
    m.free = all & ~m.ctrl & ~m.target;
    return m;
}

// Calls f(lo_index) for every basis index with the target bit clear and controls matched.
template <typename F>
void for_each_pair(const GateMasks &m, F &&f) {
    size_t sub = 0;
    while (true) {
        f(sub | m.ctrl_value);
        if (sub == m.free) {
            break;
        }
        sub = (sub - m.free) & m.free;
    }
}

[[noreturn]] void parse_error(size_t line, const std::string &why) {
    std::ostringstream msg;
    msg << "netlist line " << line << ": " << why;
    throw InputError(msg.str());
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
            i++;
        }
        size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

size_t parse_index(std::string_view s, size_t line) {
    size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        parse_error(line, "expected a wire index, got '" + std::string(s) + "'");
    }
    return v;
}

double parse_double(std::string_view s, size_t line) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
        parse_error(line, "expected a number, got '" + std::string(s) + "'");
    }
    return v;
}

Complex parse_complex(std::string_view s, size_t line) {
    size_t comma = s.find(',');
    if (comma == std::string_view::npos) {
        parse_error(line, "expected re,im, got '" + std::string(s) + "'");
    }
    return {parse_double(s.substr(0, comma), line), parse_double(s.substr(comma + 1), line)};
}

Gate parse_gate(const std::vector<std::string_view> &tok, size_t line) {
    Gate g;
    if (tok[0] == "X") {
        if (tok.size() != 2) {
            parse_error(line, "X takes one wire");
        }
        g.kind = GateKind::X;
        g.target = parse_index(tok[1], line);
        return g;
    }
    if (tok[0] == "CNOT") {
        if (tok.size() != 3) {
            parse_error(line, "CNOT takes a control and a target");
        }
        g.kind = GateKind::CNOT;
        g.controls.push_back({parse_index(tok[1], line), 1});
        g.target = parse_index(tok[2], line);
        return g;
    }
    if (tok[0] == "MCU") {
        if (tok.size() != 9 || tok[2] != "ctrl" || tok[4] != "u") {
            parse_error(line, "MCU needs: MCU <t> ctrl <w>:<pol>,... u <4 complex entries>");
        }
        g.kind = GateKind::MCU;
        g.target = parse_index(tok[1], line);
        if (tok[3] != "-") {
            std::string_view list = tok[3];
            while (!list.empty()) {
                size_t comma = list.find(',');
                std::string_view item = list.substr(0, comma);
                size_t colon = item.find(':');
                if (colon == std::string_view::npos) {
                    parse_error(line, "control '" + std::string(item) + "' needs wire:polarity");
                }
                std::string_view pol = item.substr(colon + 1);
                if (pol != "0" && pol != "1") {
                    parse_error(line, "control polarity must be 0 or 1");
                }
                g.controls.push_back({parse_index(item.substr(0, colon), line), pol == "1" ? 1 : 0});
                list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
            }
        }
        for (size_t k = 0; k < 4; k++) {
            g.u[k] = parse_complex(tok[5 + k], line);
        }
        return g;
    }
    parse_error(line, "unknown gate '" + std::string(tok[0]) + "'");
}

}  // namespace

Gate pcsynth::make_controlled(size_t target, std::vector<Control> controls, const Payload &u) {
    Gate g;
    g.target = target;
    if (u == kPauliX && controls.empty()) {
        g.kind = GateKind::X;
    } else if (u == kPauliX && controls.size() == 1 && controls[0].polarity == 1) {
        g.kind = GateKind::CNOT;
        g.controls = std::move(controls);
    } else {
        g.kind = GateKind::MCU;
        g.controls = std::move(controls);
        g.u = u;
    }
    return g;
}

void pcsynth::validate_netlist(const GateNetlist &netlist) {
    if (netlist.wires == 0 || netlist.wires > 63) {
        throw InputError("netlist wire count must be in 1..63");
    }
    if (netlist.probe >= netlist.wires) {
        throw InputError("netlist probe wire is out of range");
    }
    for (size_t k = 0; k < netlist.gates.size(); k++) {
        const Gate &g = netlist.gates[k];
        auto fail = [&](const std::string &why) {
            throw InputError("gate " + std::to_string(k) + ": " + why);
        };
        if (g.target >= netlist.wires) {
            fail("target wire " + std::to_string(g.target) + " is out of range");
        }
        std::vector<bool> seen(netlist.wires, false);
        seen[g.target] = true;
        for (const auto &c : g.controls) {
            if (c.wire >= netlist.wires) {
                fail("control wire " + std::to_string(c.wire) + " is out of range");
            }
            if (seen[c.wire]) {
                fail("wire " + std::to_string(c.wire) + " appears twice");
            }
            seen[c.wire] = true;
        }
        if (g.kind == GateKind::X && !g.controls.empty()) {
            fail("X takes no controls");
        }
        if (g.kind == GateKind::CNOT && (g.controls.size() != 1 || g.controls[0].polarity != 1)) {
            fail("CNOT takes one positive control");
        }
        if (g.kind == GateKind::MCU && payload_unitarity_error(g.u) > kPayloadTol) {
            fail("payload is not unitary");
        }
    }
}

std::string pcsynth::netlist_to_text(const GateNetlist &netlist) {
    std::string out = "wires " + std::to_string(netlist.wires) + " probe " + std::to_string(netlist.probe) + "\n";
    if (!netlist.source_hash.empty()) {
        out += "# plan " + netlist.source_hash + "\n";
    }
    for (const Gate &g : netlist.gates) {
        for (const auto &note : g.notes) {
            out += "# " + note + "\n";
        }
        switch (g.kind) {
            case GateKind::X:
                out += "X " + std::to_string(g.target) + "\n";
                break;
            case GateKind::CNOT:
                out += "CNOT " + std::to_string(g.controls[0].wire) + " " + std::to_string(g.target) + "\n";
                break;
            case GateKind::MCU: {
                out += "MCU " + std::to_string(g.target) + " ctrl ";
                if (g.controls.empty()) {
                    out += "-";
                }
                for (size_t c = 0; c < g.controls.size(); c++) {
                    if (c > 0) {
                        out += ",";
                    }
                    out += std::to_string(g.controls[c].wire) + ":" + std::to_string(g.controls[c].polarity);
                }
                out += " u";
                for (Complex z : g.u) {
                    out += " " + fmt_complex(z);
                }
                out += "\n";
                break;
            }
        }
    }
    for (const auto &note : netlist.trailing_notes) {
        out += "# " + note + "\n";
    }
    return out;
}

GateNetlist pcsynth::parse_netlist(std::string_view text) {
    GateNetlist n;
    std::vector<std::string> pending;
    bool header = false;
    size_t line_no = 0;
    while (!text.empty()) {
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty() && line[0] == '#') {
            std::string_view body = line.substr(1);
            if (!body.empty() && body[0] == ' ') {
                body.remove_prefix(1);
            }
            if (header && n.gates.empty() && pending.empty() && n.source_hash.empty() && body.starts_with("plan ")) {
                n.source_hash = std::string(body.substr(5));
            } else {
                pending.emplace_back(body);
            }
            continue;
        }
        auto tok = split_ws(line);
        if (tok.empty()) {
            continue;
        }
        if (!header) {
            if (tok.size() != 4 || tok[0] != "wires" || tok[2] != "probe") {
                parse_error(line_no, "expected 'wires <int> probe <int>'");
            }
            n.wires = parse_index(tok[1], line_no);
            n.probe = parse_index(tok[3], line_no);
            header = true;
            if (!pending.empty()) {
                parse_error(line_no, "comments before the header are not allowed");
            }
            continue;
        }
        Gate g = parse_gate(tok, line_no);
        g.notes = std::move(pending);
        pending.clear();
        n.gates.push_back(std::move(g));
    }
    if (!header) {
        throw InputError("netlist is empty: missing 'wires <int> probe <int>' header");
    }
    n.trailing_notes = std::move(pending);
    validate_netlist(n);
    return n;
}

void pcsynth::apply_gate(const Gate &gate, std::span<Complex> state, size_t wires) {
    GateMasks m = masks_for(gate, wires);
    Payload u = gate.payload();
    if (gate.kind != GateKind::MCU) {
        for_each_pair(m, [&](size_t lo) {
            std::swap(state[lo], state[lo | m.target]);
        });
        return;
    }
    for_each_pair(m, [&](size_t lo) {
        Complex a = state[lo];
        Complex b = state[lo | m.target];
        state[lo] = u[0] * a + u[1] * b;
        state[lo | m.target] = u[2] * a + u[3] * b;
    });
}

void pcsynth::run_netlist(const GateNetlist &netlist, std::span<Complex> state) {
    if (state.size() != (size_t{1} << netlist.wires)) {
        throw InputError("run_netlist: state length does not match the wire count");
    }
    for (const Gate &g : netlist.gates) {
        apply_gate(g, state, netlist.wires);
    }
}

CMatrix pcsynth::netlist_matrix(const GateNetlist &netlist) {
    if (netlist.wires > kMaxDenseWires) {
        throw InputError("netlist_matrix: " + std::to_string(netlist.wires) + " wires exceeds the dense limit of " +
                         std::to_string(kMaxDenseWires));
    }
    size_t dim = size_t{1} << netlist.wires;
    CMatrix m = CMatrix::identity(dim);
    auto data = m.data();
    // Gates act on the left, so they mix whole rows.
    for (const Gate &g : netlist.gates) {
        GateMasks mk = masks_for(g, netlist.wires);
        Payload u = g.payload();
        bool perm = g.kind != GateKind::MCU;
        for_each_pair(mk, [&](size_t lo) {
            Complex *r0 = data.data() + lo * dim;
            Complex *r1 = data.data() + (lo | mk.target) * dim;
            if (perm) {
                std::swap_ranges(r0, r0 + dim, r1);
                return;
            }
            for (size_t c = 0; c < dim; c++) {
                Complex a = r0[c];
                Complex b = r1[c];
                r0[c] = u[0] * a + u[1] * b;
                r1[c] = u[2] * a + u[3] * b;
            }
        });
    }
    return m;
}

GateNetlist pcsynth::expand_polarities(const GateNetlist &netlist) {
    GateNetlist out = netlist;
    out.gates.clear();
    for (const Gate &g : netlist.gates) {
        std::vector<size_t> flips;
        Gate core = g;
        for (auto &c : core.controls) {
            if (c.polarity == 0) {
                flips.push_back(c.wire);
                c.polarity = 1;
            }
        }
        if (flips.empty()) {
            out.gates.push_back(g);
            continue;
        }
        std::vector<std::string> notes = std::move(core.notes);
        core.notes.clear();
        for (size_t k = 0; k < flips.size(); k++) {
            Gate x = make_controlled(flips[k], {}, kPauliX);
            if (k == 0) {
                x.notes = notes;
            }
            out.gates.push_back(std::move(x));
        }
        out.gates.push_back(make_controlled(core.target, core.controls, core.payload()));
        for (size_t k = flips.size(); k-- > 0;) {
            out.gates.push_back(make_controlled(flips[k], {}, kPauliX));
        }
    }
    return out;
}

GateCounts pcsynth::count_gates(const GateNetlist &netlist) {
    GateCounts c;
    for (const Gate &g : netlist.gates) {
        switch (g.kind) {
            case GateKind::X:
                c.x++;
                break;
            case GateKind::CNOT:
                c.cnot++;
                break;
            case GateKind::MCU:
                c.mcu++;
                break;
        }
        c.max_controls = std::max(c.max_controls, g.controls.size());
    }
    return c;
}
