// Copyright 2026 The latticeq Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// latticeq: compiles lattice turn geometries into exact multilinear
// polynomials over qubit basis variables, decodes turn bitstrings into 3D
// conformations, and exhaustively enumerates turn/chain state spaces.
//
// Exit codes: 0 ok, 2 parse problem, 3 invalid lattice spec, 4 malformed
// bitstring, 5 resource guard exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "latticeq/analysis.hpp"
#include "latticeq/chain.hpp"
#include "latticeq/encoder.hpp"
#include "latticeq/errors.hpp"
#include "latticeq/lattice.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidSpec = 3;
constexpr int kExitBadBitstring = 4;
constexpr int kExitResourceGuard = 5;

struct CliConfig {
    std::string lattice_source;
    std::string bond_scale = "1";
    bool bond_scale_given = false;
    int beads = 0;
    bool beads_given = false;
    std::string bits;
    std::string format = "json";
    std::string out_path;
};

latticeq::LatticeSpec resolve_lattice(const CliConfig& cfg) {
    using latticeq::Rational;
    const std::string& src = cfg.lattice_source;
    if (src.rfind("builtin:", 0) == 0) {
        const Rational d = Rational::from_string(cfg.bond_scale);
        const std::string name = src.substr(8);
        if (name == "fcc") return latticeq::builtin_fcc(d);
        if (name == "cubic-diag") return latticeq::builtin_cubic_diag(d);
        throw latticeq::SpecParseError("unknown builtin lattice \"" + name +
                                       "\" (available: fcc, cubic-diag)");
    }
    if (cfg.bond_scale_given) {
        throw latticeq::SpecParseError("--d overrides the bond scale of builtin lattices only; "
                                       "spec files carry their own values");
    }
    return latticeq::load_lattice_file(src);
}

void emit(const CliConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path);
    if (!out) throw latticeq::Error("cannot open output file: " + cfg.out_path);
    out << text;
}

std::string dump_json(const nlohmann::ordered_json& doc) { return doc.dump(2) + "\n"; }

int run_encode(const CliConfig& cfg) {
    const auto spec = resolve_lattice(cfg);
    const auto enc = latticeq::encode(spec);
    const auto coeffs = latticeq::coefficients(spec);
    if (cfg.format == "poly") {
        emit(cfg, latticeq::encoding_to_text(enc, coeffs));
    } else {
        emit(cfg, dump_json(latticeq::encoding_to_json(enc, coeffs)));
    }
    return kExitOk;
}

int run_decode(const CliConfig& cfg) {
    const auto spec = resolve_lattice(cfg);
    const auto enc = latticeq::encode(spec);
    const auto chain = latticeq::decode_chain(enc, cfg.bits, cfg.beads);
    if (cfg.format == "xyz") {
        if (!chain.valid) {
            std::cerr << "latticeq: conformation is invalid; XYZ export needs a valid chain "
                         "(use --format json to inspect it)\n";
            return kExitBadBitstring;
        }
        emit(cfg, latticeq::export_xyz(chain));
    } else {
        emit(cfg, dump_json(latticeq::conformation_to_json(chain)));
    }
    return kExitOk;
}

int run_enumerate(const CliConfig& cfg) {
    const auto spec = resolve_lattice(cfg);
    const auto enc = latticeq::encode(spec);
    if (cfg.beads_given) {
        emit(cfg, dump_json(latticeq::chain_census_to_json(latticeq::census_chains(enc, cfg.beads))));
    } else {
        emit(cfg, dump_json(latticeq::turn_census_to_json(latticeq::census_turns(enc))));
    }
    return kExitOk;
}

int run_budget(const CliConfig& cfg) {
    const auto spec = resolve_lattice(cfg);
    const auto budget = latticeq::qubit_budget(spec, cfg.beads);
    nlohmann::ordered_json doc;
    doc["lattice"] = spec.name();
    doc["beads"] = cfg.beads;
    doc["per_turn"] = budget.per_turn;
    doc["total"] = budget.total(cfg.beads);
    emit(cfg, dump_json(doc));
    return kExitOk;
}

int run_verify(const CliConfig& cfg) {
    const auto report = latticeq::verify_published();
    if (cfg.format == "poly") {
        emit(cfg, latticeq::verify_report_table(report));
    } else {
        emit(cfg, dump_json(latticeq::verify_report_to_json(report)));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice turn encoding compiler and conformation toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;

    auto add_lattice_flags = [&cfg](CLI::App* cmd) {
        cmd->add_option("--lattice", cfg.lattice_source,
                        "builtin:fcc, builtin:cubic-diag, or a lattice spec JSON file")
            ->required();
        cmd->add_option("--d", cfg.bond_scale, "bond scale for builtin lattices, rational like 3/2")
            ->each([&cfg](const std::string&) { cfg.bond_scale_given = true; });
    };

    CLI::App* encode = app.add_subcommand("encode", "compile a lattice into turn polynomials");
    add_lattice_flags(encode);
    encode->add_option("--format", cfg.format, "json or poly")->check(CLI::IsMember({"json", "poly"}));

    CLI::App* decode = app.add_subcommand("decode", "decode a chain bitstring into bead coordinates");
    add_lattice_flags(decode);
    decode->add_option("--beads", cfg.beads, "bead count m")->required()
        ->each([&cfg](const std::string&) { cfg.beads_given = true; });
    decode->add_option("--bits", cfg.bits, "chain bitstring, one field per turn")->required();
    decode->add_option("--format", cfg.format, "json or xyz")->check(CLI::IsMember({"json", "xyz"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive turn or chain census");
    add_lattice_flags(enumerate);
    enumerate->add_option("--beads", cfg.beads, "bead count m; when present, census whole chains")
        ->each([&cfg](const std::string&) { cfg.beads_given = true; });
    enumerate->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

    CLI::App* budget = app.add_subcommand("budget", "qubit budget for an m-bead chain");
    add_lattice_flags(budget);
    budget->add_option("--beads", cfg.beads, "bead count m")->required()
        ->each([&cfg](const std::string&) { cfg.beads_given = true; });
    budget->add_option("--format", cfg.format, "json")->check(CLI::IsMember({"json"}));

    CLI::App* verify = app.add_subcommand("verify", "check computed values against the reference tables");
    verify->add_option("--format", cfg.format, "json or poly (text table)")
        ->check(CLI::IsMember({"json", "poly"}));

    for (CLI::App* cmd : {encode, decode, enumerate, budget, verify}) {
        cmd->add_option("--out", cfg.out_path, "output path (default: stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (app.got_subcommand(encode)) return run_encode(cfg);
        if (app.got_subcommand(decode)) return run_decode(cfg);
        if (app.got_subcommand(enumerate)) return run_enumerate(cfg);
        if (app.got_subcommand(budget)) return run_budget(cfg);
        if (app.got_subcommand(verify)) return run_verify(cfg);
    } catch (const latticeq::SpecParseError& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return kExitParse;
    } catch (const latticeq::InvalidSpecError& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return kExitInvalidSpec;
    } catch (const latticeq::FormatError& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return kExitBadBitstring;
    } catch (const latticeq::ResourceLimitError& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const latticeq::InvalidArgumentError& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return kExitParse;
    } catch (const latticeq::Error& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "latticeq: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
