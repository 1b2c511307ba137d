#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <iostream>

#include "yrk/jsonio.hpp"
#include "yrk/rfull.hpp"
#include "yrk/sampling.hpp"
#include "yrk/suite.hpp"

using namespace yrk;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_schema = 2;
constexpr int exit_math = 3;

Backend default_backend() {
    const char* env = std::getenv("YRK_BACKEND");
    if (env && std::string(env) == "float") return Backend::floating;
    return Backend::exact;
}

Scalar parse_cli_scalar(const std::string& text) { return parse_scalar(text, default_backend()); }

Representation load_rep(const std::string& path) {
    return representation_from_json(load_json_file(path));
}

void emit_report(const Report& rep, const std::string& out, const std::string& format) {
    if (format == "csv") {
        std::string csv = "id,anchor,samples,residual,tol,pass\n";
        for (const auto& c : rep.checks)
            csv += c.id + ",\"" + c.anchor + "\",\"" + c.samples + "\"," +
                   std::to_string(c.residual) + "," + std::to_string(c.tol) + "," +
                   (c.pass ? "1" : "0") + "\n";
        if (out.empty()) std::cout << csv;
        else {
            std::ofstream f(out);
            f << csv;
        }
        return;
    }
    if (out.empty()) std::cout << rep.to_json_text() << "\n";
    else {
        std::ofstream f(out);
        f << rep.to_json_text() << "\n";
    }
}

std::vector<Scalar> parse_h(const std::string& text, Backend bk) {
    std::vector<Scalar> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(parse_scalar(cur, bk));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yangian representation kit: Gauss factors and R-matrix checks"};
    app.require_subcommand(1);

    // ---- rep
    auto* rep_cmd = app.add_subcommand("rep", "build or verify representations");
    rep_cmd->require_subcommand(1);
    auto* rep_build = rep_cmd->add_subcommand("build", "construct a representation file");
    std::string rb_type = "sl2-eval", rb_a = "0", rb_hbar = "1", rb_out = "rep.json", rb_cartan = "A1";
    rep_build->add_option("--type", rb_type, "sl2-eval | trivial");
    rep_build->add_option("--a", rb_a, "evaluation point");
    rep_build->add_option("--hbar", rb_hbar, "deformation parameter");
    rep_build->add_option("--cartan", rb_cartan, "Cartan type for the trivial module");
    rep_build->add_option("-o,--out", rb_out, "output file");

    auto* rep_verify = rep_cmd->add_subcommand("verify", "run the defining-relation battery");
    std::string rv_in, rv_out, rv_format = "json";
    double rv_tol = 0.0;
    std::uint64_t rv_seed = 7;
    rep_verify->add_option("file", rv_in)->required();
    rep_verify->add_option("--tol", rv_tol, "residual tolerance (0 = exact)");
    rep_verify->add_option("--seed", rv_seed);
    rep_verify->add_option("-o,--out", rv_out);
    rep_verify->add_option("--format", rv_format, "json | csv");

    // ---- tensor
    auto* tensor_cmd = app.add_subcommand("tensor", "tensor two representation files");
    std::string t_mode = "drinfeld", t_s = "0", t_out = "tensor.json";
    std::vector<std::string> t_files;
    tensor_cmd->add_option("--mode", t_mode, "drinfeld | standard");
    tensor_cmd->add_option("--s", t_s, "shift parameter");
    tensor_cmd->add_option("files", t_files, "v1.json v2.json")->expected(2);
    tensor_cmd->add_option("-o,--out", t_out);

    // ---- rminus
    auto* rm_cmd = app.add_subcommand("rminus", "lower Gauss factor");
    rm_cmd->set_help_flag("--help", "print help"); // frees -h for the Cartan direction
    std::string rm_v1, rm_v2, rm_method = "recursion", rm_h, rm_out = "rminus.json";
    rm_cmd->add_option("--v1", rm_v1)->required();
    rm_cmd->add_option("--v2", rm_v2)->required();
    rm_cmd->add_option("--method", rm_method, "recursion | closed | both");
    rm_cmd->add_option("--h", rm_h, "regular direction, comma separated alpha_i(h)");
    rm_cmd->add_option("-o,--out", rm_out);

    // ---- rzero
    auto* rz_cmd = app.add_subcommand("rzero", "abelian factor");
    rz_cmd->require_subcommand(1);
    auto* rz_compute = rz_cmd->add_subcommand("compute", "resummed product at a point");
    std::string rz_v1, rz_v2, rz_dir = "up", rz_s = "5.0", rz_out;
    double rz_tol = 1e-10;
    rz_compute->add_option("--v1", rz_v1)->required();
    rz_compute->add_option("--v2", rz_v2)->required();
    rz_compute->add_option("--direction", rz_dir, "up | down");
    rz_compute->add_option("--s", rz_s);
    rz_compute->add_option("--tol", rz_tol);
    rz_compute->add_option("-o,--out", rz_out);

    auto* rz_formal = rz_cmd->add_subcommand("formal", "formal series coefficients");
    std::string rzf_v1, rzf_v2, rzf_out;
    int rzf_order = 6;
    rz_formal->add_option("--v1", rzf_v1)->required();
    rz_formal->add_option("--v2", rzf_v2)->required();
    rz_formal->add_option("--order", rzf_order);
    rz_formal->add_option("-o,--out", rzf_out);

    auto* rz_eta = rz_cmd->add_subcommand("eta", "monodromy checks");
    std::string rze_v1, rze_v2, rze_samples = "0.3,0.7,1.1", rze_out, rze_format = "json";
    double rze_tol = 1e-8;
    rz_eta->add_option("--v1", rze_v1)->required();
    rz_eta->add_option("--v2", rze_v2)->required();
    rz_eta->add_option("--samples", rze_samples);
    rz_eta->add_option("--tol", rze_tol);
    rz_eta->add_option("-o,--out", rze_out);
    rz_eta->add_option("--format", rze_format);

    // ---- check
    auto* check_cmd = app.add_subcommand("check", "identity batteries on representation files");
    std::string c_kind, c_dir = "up", c_out, c_format = "json";
    std::vector<std::string> c_reps;
    std::string c_s1 = "3.1", c_s2 = "2.7";
    double c_tol = 1e-7;
    std::uint64_t c_seed = 7;
    int c_nsamples = 5;
    check_cmd->add_option("kind", c_kind, "qybe | cabling | unitarity | asymptotics | relations | cocycle | intertwine")
        ->required();
    check_cmd->add_option("--reps", c_reps, "representation files")->expected(1, 3);
    check_cmd->add_option("--direction", c_dir);
    check_cmd->add_option("--s1", c_s1);
    check_cmd->add_option("--s2", c_s2);
    check_cmd->add_option("--tol", c_tol);
    check_cmd->add_option("--seed", c_seed);
    check_cmd->add_option("--samples", c_nsamples, "number of seeded sample pairs");
    check_cmd->add_option("-o,--out", c_out);
    check_cmd->add_option("--format", c_format);

    // ---- suite
    auto* suite_cmd = app.add_subcommand("suite", "verification batteries");
    suite_cmd->require_subcommand(1);
    auto* suite_full = suite_cmd->add_subcommand("full", "the whole acceptance battery");
    std::uint64_t sf_seed = 7;
    std::string sf_out, sf_format = "json";
    suite_full->add_option("--seed", sf_seed);
    suite_full->add_option("-o,--out", sf_out);
    suite_full->add_option("--format", sf_format);

    CLI11_PARSE(app, argc, argv);

    try {
        Backend bk = default_backend();

        if (rep_build->parsed()) {
            Representation v = [&]() {
                if (rb_type == "sl2-eval")
                    return Representation::evaluation_sl2(parse_cli_scalar(rb_a),
                                                          parse_cli_scalar(rb_hbar));
                if (rb_type == "trivial") {
                    json cj;
                    cj["type"] = rb_cartan;
                    return Representation::trivial(cartan_from_json(cj), parse_cli_scalar(rb_hbar));
                }
                throw std::runtime_error("unknown rep type " + rb_type);
            }();
            save_json_file(rb_out, representation_to_json(v));
            std::cout << "wrote " << rb_out << "\n";
            return exit_ok;
        }
        if (rep_verify->parsed()) {
            Representation v = load_rep(rv_in);
            Report r = v.verify_relations(rv_seed, rv_tol);
            r.input_hash = content_hash(load_json_file(rv_in).dump());
            emit_report(r, rv_out, rv_format);
            return r.all_pass() ? exit_ok : exit_check_failed;
        }
        if (tensor_cmd->parsed()) {
            Representation v1 = load_rep(t_files[0]);
            Representation v2 = load_rep(t_files[1]);
            Scalar s = parse_cli_scalar(t_s);
            if (v1.backend() == Backend::floating) s = s.to_float();
            Representation out = t_mode == "standard" ? standard_tensor(v1, v2, s)
                                                      : drinfeld_tensor(v1, v2, s);
            save_json_file(t_out, representation_to_json(out));
            std::cout << "wrote " << t_out << "\n";
            return exit_ok;
        }
        if (rm_cmd->parsed()) {
            Representation v1 = load_rep(rm_v1);
            Representation v2 = load_rep(rm_v2);
            std::vector<Scalar> h;
            if (!rm_h.empty()) h = parse_h(rm_h, v1.backend());
            json out;
            if (rm_method == "recursion" || rm_method == "both")
                out["recursion"] = ratmat_to_json(rminus_recursive(v1, v2, h));
            if (rm_method == "closed" || rm_method == "both")
                out["closed"] = ratmat_to_json(rminus_sl2_closed_form(v1, v2));
            if (rm_method == "both")
                out["agree"] = rminus_recursive(v1, v2, h) == rminus_sl2_closed_form(v1, v2);
            save_json_file(rm_out, out);
            std::cout << "wrote " << rm_out << "\n";
            return exit_ok;
        }
        if (rz_compute->parsed()) {
            Representation v1 = load_rep(rz_v1);
            Representation v2 = load_rep(rz_v2);
            AbelianOperator a = abelian_A(v1, v2);
            ProductInfo info;
            Matrix m = rzero_updown(a, parse_cli_scalar(rz_s).to_complex(), rz_dir == "up",
                                    rz_tol, &info);
            json out;
            out["value"] = matrix_to_json(m);
            out["factors"] = info.factors;
            out["tail_estimate"] = info.tail_estimate;
            out["extrapolated"] = info.extrapolated;
            if (rz_out.empty()) std::cout << out.dump(2) << "\n";
            else save_json_file(rz_out, out);
            return exit_ok;
        }
        if (rz_formal->parsed()) {
            Representation v1 = load_rep(rzf_v1);
            Representation v2 = load_rep(rzf_v2);
            PowerSeries ser = rzero_formal(v1, v2, rzf_order);
            json out;
            out["variable"] = "s";
            json coeffs = json::array();
            for (int k = 0; k >= -rzf_order; --k) {
                json c;
                c["power"] = k;
                c["matrix"] = matrix_to_json(ser.coeff_of_power(k));
                coeffs.push_back(c);
            }
            out["coefficients"] = coeffs;
            if (rzf_out.empty()) std::cout << out.dump(2) << "\n";
            else save_json_file(rzf_out, out);
            return exit_ok;
        }
        if (rz_eta->parsed()) {
            Representation v1 = load_rep(rze_v1);
            Representation v2 = load_rep(rze_v2);
            std::vector<std::complex<double>> samples;
            for (auto& s : parse_h(rze_samples, Backend::floating))
                samples.push_back(s.to_complex());
            Report r = monodromy_eta0(v1, v2, samples, rze_tol);
            emit_report(r, rze_out, rze_format);
            return r.all_pass() ? exit_ok : exit_check_failed;
        }
        if (check_cmd->parsed()) {
            std::vector<Representation> reps;
            for (auto& f : c_reps) reps.push_back(load_rep(f));
            bool up = c_dir != "down";
            Scalar s1 = parse_cli_scalar(c_s1), s2 = parse_cli_scalar(c_s2);
            SamplePool pool(c_seed, Backend::floating, 4.0);
            std::vector<std::pair<Scalar, Scalar>> samples{{s1, s2}};
            for (int k = 1; k < c_nsamples; ++k)
                samples.push_back({pool.draw_avoiding({}, 0.0), pool.draw_avoiding({}, 0.0)});
            Report r;
            if (c_kind == "qybe") {
                if (reps.size() != 3) throw std::runtime_error("qybe needs three representations");
                r = check_qybe(reps[0], reps[1], reps[2], up, samples, c_tol);
            } else if (c_kind == "cabling" || c_kind == "unitarity") {
                if (reps.size() != 3) throw std::runtime_error("cabling needs three representations");
                r = check_full_cabling_unitarity(reps[0], reps[1], reps[2], up, samples, c_tol);
            } else if (c_kind == "asymptotics") {
                if (reps.size() < 2) throw std::runtime_error("asymptotics needs two representations");
                // rays in both halfplane conventions: multiples of hbar and
                // of ell*hbar
                double ell = reps[0].cartan().ell();
                r = asymptotic_report(reps[0], reps[1], up, 4,
                                      {30.0, 50.0, 30.0 * ell, 50.0 * ell}, c_tol);
            } else if (c_kind == "relations") {
                r = reps.at(0).verify_relations(c_seed, c_tol);
            } else if (c_kind == "cocycle") {
                if (reps.size() != 3) throw std::runtime_error("cocycle needs three representations");
                std::vector<std::pair<Scalar, Scalar>> ex;
                SamplePool epool(c_seed, reps[0].backend());
                for (int k = 0; k < c_nsamples; ++k)
                    ex.push_back({epool.draw_avoiding({}, 0.0), epool.draw_avoiding({}, 0.0)});
                r = check_cocycle(reps[0], reps[1], reps[2], ex);
            } else if (c_kind == "intertwine") {
                if (reps.size() < 2) throw std::runtime_error("intertwine needs two representations");
                r = check_intertwine_minus(reps[0], reps[1]);
            } else {
                throw std::runtime_error("unknown check kind " + c_kind);
            }
            r.seed = c_seed;
            std::string blob;
            for (auto& f : c_reps) blob += load_json_file(f).dump();
            r.input_hash = content_hash(blob);
            emit_report(r, c_out, c_format);
            return r.all_pass() ? exit_ok : exit_check_failed;
        }
        if (suite_full->parsed()) {
            Report r = acceptance_battery(sf_seed);
            emit_report(r, sf_out, sf_format);
            for (const auto& c : r.checks)
                if (!c.pass)
                    std::cerr << "FAIL " << c.id << " residual=" << c.residual << "\n";
            std::cout << (r.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
            return r.all_pass() ? exit_ok : exit_check_failed;
        }
        (void)bk;
    } catch (const backend_mismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_schema;
    } catch (const math_domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_math;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return exit_schema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_schema;
    }
    return exit_ok;
}
