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

// Command-line front end over the pcsynth C API.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcsynth/pcsynth.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char *kProbeHelp =
    "Probe value that flags success (default 1). Some published circuit diagrams for this machine label "
    "the probe the other way round; 0 follows that labeling by appending a final X on the probe.";

// Thrown to leave a command with a status code; the message goes to stderr.
struct Exit {
    int code;
    std::string message;
};

struct CString {
    char *p = nullptr;
    ~CString() { pcs_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

void check(pcs_status s) {
    if (s != PCS_OK) {
        throw Exit{static_cast<int>(s), pcs_last_error()};
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Exit{PCS_INPUT_ERROR, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes through a sibling temporary so a failed job never leaves a partial file.
void write_atomic(const fs::path &path, const std::string &data) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Exit{PCS_INPUT_ERROR, "cannot write " + tmp.string()};
        }
        out << data;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw Exit{PCS_INPUT_ERROR, "cannot write " + tmp.string()};
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Exit{PCS_INPUT_ERROR, "cannot rename onto " + path.string()};
    }
}

std::vector<double> parse_numbers(const std::string &text, const char *what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw Exit{PCS_INPUT_ERROR, std::string("bad number in ") + what + ": '" + item + "'"};
        }
    }
    if (out.empty()) {
        throw Exit{PCS_INPUT_ERROR, std::string(what) + " is empty"};
    }
    return out;
}

struct JobFlags {
    std::string states;
    std::string mode = "identify";
    size_t copies_in = 1;
    size_t copies_out = 2;
    std::string gamma = "max-uniform";
    int probe_success = 1;
    std::string core = "isometry";
    bool expand = false;
    std::vector<double> gamma_values;

    void add(CLI::App *cmd, bool need_states = true) {
        auto *o = cmd->add_option("--states", states, "State-set JSON file");
        if (need_states) {
            o->required();
        }
        cmd->add_option("--mode", mode, "identify or clone")->check(CLI::IsMember({"identify", "clone"}));
        cmd->add_option("--copies-in", copies_in, "Input copies M");
        cmd->add_option("--copies-out", copies_out, "Output copies N (clone)");
        cmd->add_option("--gamma", gamma, "Comma separated success probabilities, or max-uniform");
        cmd->add_option("--probe-success", probe_success, kProbeHelp)->check(CLI::IsMember({0, 1}));
        cmd->add_option("--core", core, "Core construction: isometry or spectral")
            ->check(CLI::IsMember({"isometry", "spectral"}));
        cmd->add_flag("--expand-polarities", expand, "Replace 0-controls by X conjugation");
    }

    pcs_job job() {
        pcs_job j;
        pcs_job_init(&j);
        j.mode = mode == "clone" ? PCS_MODE_CLONE : PCS_MODE_IDENTIFY;
        j.copies_in = copies_in;
        j.copies_out = copies_out;
        j.probe_success = probe_success;
        j.core = core == "spectral" ? PCS_CORE_SPECTRAL : PCS_CORE_ISOMETRY;
        j.expand_polarities = expand ? 1 : 0;
        if (gamma != "max-uniform") {
            gamma_values = parse_numbers(gamma, "--gamma");
            j.gamma = gamma_values.data();
            j.gamma_len = gamma_values.size();
        }
        return j;
    }
};

using SetPtr = std::unique_ptr<pcs_state_set, decltype(&pcs_state_set_free)>;
using MachinePtr = std::unique_ptr<pcs_machine, decltype(&pcs_machine_free)>;
using NetlistPtr = std::unique_ptr<pcs_netlist, decltype(&pcs_netlist_free)>;

SetPtr load_states(const std::string &path) {
    pcs_state_set *s = nullptr;
    check(pcs_state_set_parse(read_file(path).c_str(), &s));
    return SetPtr(s, pcs_state_set_free);
}

NetlistPtr load_netlist(const std::string &path) {
    pcs_netlist *n = nullptr;
    check(pcs_netlist_parse(read_file(path).c_str(), &n));
    return NetlistPtr(n, pcs_netlist_free);
}

MachinePtr synthesize(const pcs_state_set *set, const pcs_job &job) {
    pcs_machine *m = nullptr;
    check(pcs_synthesize(set, &job, &m));
    return MachinePtr(m, pcs_machine_free);
}

std::string num(const Json &v) {
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
        return buf;
    }
    return v.dump();
}

// Aligned table of the given fields of every entry in `rows`.
void table(std::ostream &out, const Json &rows, const std::vector<std::string> &fields) {
    std::vector<size_t> width;
    for (const auto &f : fields) {
        width.push_back(std::max<size_t>(f.size(), 16) + 2);
    }
    for (size_t c = 0; c < fields.size(); c++) {
        out << std::setw(static_cast<int>(width[c])) << fields[c];
    }
    out << "\n";
    for (const auto &r : rows) {
        for (size_t c = 0; c < fields.size(); c++) {
            const auto &f = fields[c];
            out << std::setw(static_cast<int>(width[c])) << (r.contains(f) ? num(r[f]) : std::string("-"));
        }
        out << "\n";
    }
}

void human(std::ostream &out, const Json &j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json &v = it.value();
        if (v.is_array() && !v.empty() && v.front().is_object()) {
            std::vector<std::string> fields;
            for (auto f = v.front().begin(); f != v.front().end(); ++f) {
                if (!f.value().is_object()) {
                    fields.push_back(f.key());
                }
            }
            out << it.key() << ":\n";
            table(out, v, fields);
        } else if (v.is_object()) {
            out << it.key() << ":\n";
            std::ostringstream inner;
            human(inner, v);
            std::istringstream lines(inner.str());
            for (std::string line; std::getline(lines, line);) {
                out << "  " << line << "\n";
            }
        } else if (v.is_primitive()) {
            out << it.key() << ": " << num(v) << "\n";
        } else {
            out << it.key() << ": " << v.dump() << "\n";
        }
    }
}

// Sends a report to `path`, or to stdout when no path is given.
void emit(const std::string &report, const std::string &path, bool as_table) {
    if (!path.empty()) {
        write_atomic(path, report);
    }
    if (path.empty() || as_table) {
        if (as_table) {
            human(std::cout, Json::parse(report));
        } else {
            std::cout << report;
        }
    }
}

struct Perturbation {
    std::vector<double> delta;
    std::vector<double> tau;
};

// "d1,d2,...[@t0,t1,...]"
Perturbation parse_perturb(const std::string &spec) {
    Perturbation p;
    auto at = spec.find('@');
    p.delta = parse_numbers(spec.substr(0, at), "--perturb");
    if (at != std::string::npos) {
        p.tau = parse_numbers(spec.substr(at + 1), "--perturb phases");
    }
    return p;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Synthesize probabilistic cloning and identification circuits"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", pcs_version());
    bool as_table = false;
    app.add_flag("--human", as_table, "Print reports as tables");

    JobFlags job;
    std::string out_path;
    std::string plan_path;
    std::string report_path;
    std::string netlist_path;
    std::string out_dir;
    std::string perturb;
    double tolerance = 1e-8;
    size_t shots = 0;
    uint64_t seed = 1;

    auto *feas = app.add_subcommand("feas", "Check or locate a success probability allocation");
    job.add(feas);
    feas->add_option("-o,--out", out_path, "Report path");

    auto *synth = app.add_subcommand("synth", "Synthesize the machine and lower it to a netlist");
    job.add(synth);
    synth->add_option("-o,--out", out_path, "Netlist path")->required();
    synth->add_option("--plan", plan_path, "Also write the circuit plan");
    synth->add_option("--report", report_path, "Also write the synthesis report");

    auto *lower = app.add_subcommand("lower", "Lower a circuit plan to a netlist");
    lower->add_option("--plan", plan_path, "Circuit plan JSON")->required();
    lower->add_option("-o,--out", out_path, "Netlist path");
    bool lower_expand = false;
    lower->add_flag("--expand-polarities", lower_expand, "Replace 0-controls by X conjugation");

    auto *simulate = app.add_subcommand("simulate", "Run a netlist on each input state");
    job.add(simulate);
    simulate->add_option("--netlist", netlist_path, "Netlist file")->required();
    simulate->add_option("--shots", shots, "Sampled probe readings per state");
    simulate->add_option("--seed", seed, "Sampling seed");
    simulate->add_option("-o,--out", out_path, "Report path");

    auto *verify = app.add_subcommand("verify", "Check a netlist against the machine contract");
    job.add(verify);
    verify->add_option("--netlist", netlist_path, "Netlist file")->required();
    verify->add_option("--perturb", perturb, "Blank-register error d1,d2,...[@t0,t1,...] (clone)");
    verify->add_option("--tolerance", tolerance, "Residual tolerance")->check(CLI::PositiveNumber);
    verify->add_option("-o,--out", out_path, "Report path");

    auto *run = app.add_subcommand("run", "Full pipeline: feasibility, synthesis, lowering, verification");
    job.add(run);
    run->add_option("--out-dir", out_dir, "Output directory")->required();
    run->add_option("--tolerance", tolerance, "Residual tolerance")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : PCS_INPUT_ERROR;
    }

    try {
        if (*feas) {
            auto set = load_states(job.states);
            pcs_job j = job.job();
            CString rep;
            pcs_status s = pcs_feasibility(set.get(), &j, &rep.p);
            std::string err = s == PCS_OK ? "" : pcs_last_error();
            if (rep.p) {
                emit(rep.str(), out_path, as_table);
            }
            if (s != PCS_OK) {
                throw Exit{s, err};
            }
        } else if (*synth) {
            auto set = load_states(job.states);
            pcs_job j = job.job();
            auto m = synthesize(set.get(), j);
            CString text, plan, summary;
            check(pcs_machine_netlist_text(m.get(), &text.p));
            check(pcs_machine_plan_json(m.get(), &plan.p));
            check(pcs_machine_summary_json(m.get(), &summary.p));
            write_atomic(out_path, text.str());
            if (!plan_path.empty()) {
                write_atomic(plan_path, plan.str());
            }
            if (!report_path.empty()) {
                write_atomic(report_path, summary.str());
            }
            if (as_table) {
                human(std::cout, Json::parse(summary.str()));
            }
        } else if (*lower) {
            CString text;
            check(pcs_lower_plan(read_file(plan_path).c_str(), lower_expand ? 1 : 0, &text.p));
            emit(text.str(), out_path, false);
        } else if (*simulate) {
            auto set = load_states(job.states);
            auto n = load_netlist(netlist_path);
            pcs_job j = job.job();
            CString rep;
            check(pcs_simulate(n.get(), set.get(), &j, shots, seed, &rep.p));
            emit(rep.str(), out_path, as_table);
        } else if (*verify) {
            auto set = load_states(job.states);
            auto n = load_netlist(netlist_path);
            pcs_job j = job.job();
            auto m = synthesize(set.get(), j);
            CString rep;
            pcs_status s = pcs_verify(m.get(), n.get(), tolerance, &rep.p);
            std::string err = s == PCS_OK ? "" : pcs_last_error();
            if (s != PCS_OK && s != PCS_VERIFY_FAILED) {
                throw Exit{s, err};
            }
            Json report = Json::parse(rep.str());
            if (!perturb.empty()) {
                auto p = parse_perturb(perturb);
                CString ad;
                pcs_status sa = pcs_error_adaptation(m.get(), n.get(), p.delta.data(), p.delta.size(),
                                                     p.tau.data(), p.tau.size(), tolerance, &ad.p);
                if (sa != PCS_OK && sa != PCS_VERIFY_FAILED) {
                    throw Exit{sa, pcs_last_error()};
                }
                report["error_adaptation"] = Json::parse(ad.str());
                if (sa != PCS_OK && s == PCS_OK) {
                    s = sa;
                    err = pcs_last_error();
                }
            }
            emit(report.dump(2) + "\n", out_path, as_table);
            if (s != PCS_OK) {
                throw Exit{s, err};
            }
        } else if (*run) {
            auto set = load_states(job.states);
            pcs_job j = job.job();
            CString feas_rep;
            pcs_status fs_status = pcs_feasibility(set.get(), &j, &feas_rep.p);
            if (fs_status != PCS_OK) {
                throw Exit{fs_status, pcs_last_error()};
            }
            auto m = synthesize(set.get(), j);
            CString text, plan, summary, ver;
            check(pcs_machine_netlist_text(m.get(), &text.p));
            check(pcs_machine_plan_json(m.get(), &plan.p));
            check(pcs_machine_summary_json(m.get(), &summary.p));
            pcs_status vs = pcs_verify(m.get(), nullptr, tolerance, &ver.p);
            std::string err = vs == PCS_OK ? "" : pcs_last_error();
            if (vs != PCS_OK && vs != PCS_VERIFY_FAILED) {
                throw Exit{vs, err};
            }
            fs::path dir(out_dir);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec) {
                throw Exit{PCS_INPUT_ERROR, "cannot create " + out_dir};
            }
            write_atomic(dir / "feasibility.json", feas_rep.str());
            write_atomic(dir / "plan.json", plan.str());
            write_atomic(dir / "netlist.txt", text.str());
            write_atomic(dir / "synth.json", summary.str());
            write_atomic(dir / "verify.json", ver.str());
            if (as_table) {
                human(std::cout, Json::parse(ver.str()));
            }
            if (vs != PCS_OK) {
                throw Exit{vs, err};
            }
        }
    } catch (const Exit &e) {
        std::cerr << "pcsynth: " << e.message << "\n";
        return e.code;
    } catch (const std::exception &e) {
        std::cerr << "pcsynth: " << e.what() << "\n";
        return PCS_INTERNAL_ERROR;
    }
    return 0;
}
