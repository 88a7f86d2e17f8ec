// jcf: Jordan canonical form over exact rationals.
//
// Subcommands:
//   compute  full decomposition (P, J, P^-1) of a matrix file
//   verify   exact check of a claimed (A, P, J) triple
//   oracle   block structure by classical kernel filtration
//   gen      manufacture a matrix with prescribed Jordan structure
//
// Exit codes: 0 success (verified), 1 verification failed, and one stable
// code per error class (see exit_code_for).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jcf/corpus_gen.hpp"
#include "jcf/matrix_io.hpp"
#include "jcf/oracle.hpp"
#include "jcf/pipeline.hpp"

namespace {

int exit_code_for(jcf::Errc code) {
    switch (code) {
        case jcf::Errc::parse_error: return 2;
        case jcf::Errc::dimension_error:
        case jcf::Errc::dimension_mismatch: return 3;
        case jcf::Errc::not_factorable_over_rationals: return 4;
        case jcf::Errc::inconsistent_spectrum: return 5;
        case jcf::Errc::seed_exhaustion: return 6;
        case jcf::Errc::singular_matrix: return 7;
        case jcf::Errc::division_by_zero: return 8;
        case jcf::Errc::zero_projection:
        case jcf::Errc::cap_exceeded:
        case jcf::Errc::exhausted_eigenvalue:
        case jcf::Errc::incomplete_basis:
        case jcf::Errc::internal: return 9;
    }
    return 9;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw jcf::Error(jcf::Errc::parse_error, "cannot write '" + path + "'");
    out << text;
}

jcf::OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return jcf::OutputFormat::plain;
    if (name == "json") return jcf::OutputFormat::json;
    throw jcf::Error(jcf::Errc::parse_error, "unknown format '" + name + "'");
}

// gen structure grammar: semicolon-separated "value:size,size,..." groups,
// e.g. "3:4,2;2:3,1".
jcf::StructureSpec parse_structure(const std::string& text) {
    jcf::StructureSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t semi = text.find(';', pos);
        const std::string group =
            text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        const std::size_t colon = group.find(':');
        if (colon == std::string::npos)
            throw jcf::Error(jcf::Errc::parse_error,
                             "group '" + group + "' is not value:sizes");
        const jcf::Rational lambda = jcf::Rational::parse(group.substr(0, colon));
        std::vector<std::size_t> sizes;
        std::size_t spos = colon + 1;
        while (spos <= group.size()) {
            const std::size_t comma = group.find(',', spos);
            const std::string tok =
                group.substr(spos, comma == std::string::npos ? std::string::npos : comma - spos);
            try {
                std::size_t consumed = 0;
                const std::size_t size = std::stoul(tok, &consumed);
                if (consumed != tok.size() || size == 0) throw std::invalid_argument("");
                sizes.push_back(size);
            } catch (const std::exception&) {
                throw jcf::Error(jcf::Errc::parse_error, "bad block size '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            spos = comma + 1;
        }
        spec.eigen_blocks.emplace_back(lambda, std::move(sizes));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jordan canonical form over exact rational arithmetic"};
    app.require_subcommand(1);

    std::string matrix_path, p_path, j_path, output_path, format_name = "plain";
    std::string spectrum_text, structure_text;
    std::uint64_t seed = 0;
    bool trace = false;
    std::size_t plant_index = 0;
    bool has_plant = false;

    auto* compute = app.add_subcommand("compute", "decompose A into P, J, P^-1");
    compute->add_option("matrix", matrix_path, "matrix file")->required();
    compute->add_option("--spectrum", spectrum_text,
                        "known spectrum as value:multiplicity pairs, e.g. 2:4,3:6");
    compute->add_option("--seed", seed, "PRNG seed for the chain seed policy");
    compute->add_flag("--trace", trace, "stream stage progress to stderr");
    compute->add_option("--format", format_name, "plain|json")->capture_default_str();
    compute->add_option("--output", output_path, "write the report to a file");

    auto* verify = app.add_subcommand("verify", "check a claimed decomposition exactly");
    verify->add_option("matrix", matrix_path, "matrix file (A)")->required();
    verify->add_option("p", p_path, "transition matrix file (P)")->required();
    verify->add_option("j", j_path, "Jordan matrix file (J)")->required();

    auto* oracle = app.add_subcommand("oracle", "block structure by kernel filtration");
    oracle->add_option("matrix", matrix_path, "matrix file")->required();
    oracle->add_option("--spectrum", spectrum_text, "known spectrum, skips factorization");

    auto* gen = app.add_subcommand("gen", "generate a matrix with prescribed structure");
    gen->add_option("--structure", structure_text,
                    "eigenvalue:sizes groups separated by ';', e.g. \"3:4,2;2:3,1\"")
        ->required();
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--plant-basis-index", plant_index,
                    "make e_k (0-based) an eigenvector of the output")
        ->trigger_on_parse()
        ->each([&](const std::string&) { has_plant = true; });
    gen->add_option("--output", output_path, "write the matrix to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) {
            const jcf::Matrix a = jcf::load_matrix_file(matrix_path);
            jcf::PipelineOptions opts;
            opts.prng_seed = seed;
            opts.trace = trace;
            if (!spectrum_text.empty()) opts.spectrum = jcf::parse_spectrum(spectrum_text);
            const jcf::PipelineReport report = jcf::run_pipeline(a, opts);
            write_output(jcf::emit(report, parse_format(format_name)), output_path);
            return report.verification.pass() ? 0 : 1;
        }
        if (verify->parsed()) {
            const jcf::Matrix a = jcf::load_matrix_file(matrix_path);
            const jcf::Matrix p = jcf::load_matrix_file(p_path);
            const jcf::Matrix j = jcf::load_matrix_file(j_path);
            const jcf::VerifyReport report = jcf::verify_decomposition(a, p, j);
            std::cout << "jordan form: " << (report.jordan_form ? "ok" : "FAIL") << "\n"
                      << "A*P = P*J:   " << (report.similarity ? "ok" : "FAIL") << "\n"
                      << "P invertible: " << (report.invertible ? "ok" : "FAIL") << "\n"
                      << "verdict: " << (report.pass() ? "PASS" : "FAIL") << "\n";
            if (!report.detail.empty()) std::cout << "detail: " << report.detail << "\n";
            return report.pass() ? 0 : 1;
        }
        if (oracle->parsed()) {
            const jcf::Matrix a = jcf::load_matrix_file(matrix_path);
            jcf::Spectrum spectrum;
            if (!spectrum_text.empty())
                spectrum = jcf::parse_spectrum(spectrum_text);
            else
                spectrum = jcf::factor_spectrum(jcf::characteristic_polynomial(a));
            const jcf::JordanStructure structure = jcf::structure_by_filtration(a, spectrum);
            std::cout << structure.str();
            return 0;
        }
        if (gen->parsed()) {
            jcf::StructureSpec spec = parse_structure(structure_text);
            spec.prng_seed = seed;
            const jcf::GeneratedInstance inst =
                has_plant ? jcf::plant_standard_basis_eigenvector(spec, plant_index)
                          : jcf::generate(spec);
            write_output(jcf::render_matrix(inst.a), output_path);
            return 0;
        }
    } catch (const jcf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 9;
    }
    return 9;
}
