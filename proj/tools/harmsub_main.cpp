// harmsub: series I/O, operator application, figure-data emission,
// subordination and admissibility runs, bundled example reproduction.
//
// Exit codes: 0 = clean verdict (no violation / consistent / pass),
//             1 = violation, contradiction, or failed example,
//             2 = usage or runtime error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "harmsub/examples.hpp"
#include "harmsub/figures.hpp"
#include "harmsub/report.hpp"
#include "harmsub/series_io.hpp"

namespace {

using namespace harmsub;

HarmonicSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open series file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize(buf.str());
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error("cannot open output file: " + path);
    out << text;
}

// Series file or named builtin, as the map under test.
BoundaryMapQ load_map(const std::string& source) {
    if (source == "halfplane" || source.rfind("ellipse:", 0) == 0)
        return builtin_map(source);
    HarmonicSeries s = load_series(source);
    // Degree-1 real-coefficient maps carry their exact image domain.
    if (s.degree() == 1 && s.a(1).imag() == 0.0 && s.b(1).imag() == 0.0 &&
        s.a(1).real() > s.b(1).real() && s.b(1).real() > 0.0 &&
        std::abs(s.b(0)) == 0.0) {
        const double M1 = s.a(1).real(), M2 = s.b(1).real();
        return BoundaryMapQ(
            HarmonicFunction::from_series(s, "series"), {}, 1e-3,
            DomainSpec{Ellipse{s.a(0), M1 + M2, M1 - M2}});
    }
    return BoundaryMapQ(HarmonicFunction::from_series(std::move(s), "series"));
}

DomainSpec parse_domain(const std::string& text) {
    const auto nums = [](const std::string& s) {
        std::vector<double> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(std::stod(item));
        return v;
    };
    if (text.rfind("halfplane:", 0) == 0)
        return DomainSpec{HalfPlane{std::stod(text.substr(10))}};
    if (text.rfind("disk:", 0) == 0) {
        const auto v = nums(text.substr(5));
        if (v.size() != 3)
            throw Error("domain: expected disk:cx,cy,r");
        return DomainSpec{Disk{Complex(v[0], v[1]), v[2]}};
    }
    if (text.rfind("ellipse:", 0) == 0) {
        const auto v = nums(text.substr(8));
        if (v.size() != 4)
            throw Error("domain: expected ellipse:cx,cy,a,b");
        return DomainSpec{Ellipse{Complex(v[0], v[1]), v[2], v[3]}};
    }
    throw Error("domain: unknown region '" + text + "'");
}

PsiSpec parse_psi(const std::string& text) {
    if (text == "r+s")
        return PsiSpec::affine(1.0, 1.0, 0.0, 0.0);
    if (text == "r+s+t")
        return PsiSpec::affine(1.0, 1.0, 1.0, 0.0);
    if (text == "r")
        return PsiSpec::affine(1.0, 0.0, 0.0, 0.0);
    // "affine:ar,ai,br,bi,gr,gi,dr,di"
    if (text.rfind("affine:", 0) == 0) {
        std::vector<double> v;
        std::stringstream ss(text.substr(7));
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(std::stod(item));
        if (v.size() != 8)
            throw Error("psi: expected affine:ar,ai,br,bi,gr,gi,dr,di");
        return PsiSpec::affine({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]},
                               {v[6], v[7]});
    }
    throw Error("psi: unknown form '" + text + "' (r+s, r+s+t, r, affine:...)");
}

void print_coefficient_table(const HarmonicSeries& s) {
    std::cout << "n\ta_n\t\t\tb_n\n";
    std::cout.precision(17);
    for (int n = 0; n <= s.degree(); ++n)
        std::cout << n << '\t' << s.a(n).real() << (s.a(n).imag() < 0 ? "" : "+")
                  << s.a(n).imag() << "i\t" << s.b(n).real()
                  << (s.b(n).imag() < 0 ? "" : "+") << s.b(n).imag() << "i\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"harmonic subordination toolkit"};
    app.require_subcommand(1);

    ReportOptions ropt;
    bool no_timestamp = false;
    app.add_flag("--no-timestamp", no_timestamp,
                 "omit the timestamp field from reports");

    // ops
    auto* ops = app.add_subcommand("ops", "apply D or DFrak to a series file");
    std::string ops_in, ops_out, ops_operator = "D";
    int ops_order = 1;
    ops->add_option("--in", ops_in, "series document")->required();
    ops->add_option("--operator", ops_operator, "D or Dfrak");
    ops->add_option("--order", ops_order, "operator order (>= 1)");
    ops->add_option("--output,-o", ops_out, "output path ('-' = stdout)");

    // map
    auto* map = app.add_subcommand("map", "emit image-of-disk CSV data");
    std::string map_source, map_out, map_interior_out;
    int map_n_boundary = 512, map_n_interior = 0;
    std::vector<double> map_radii;
    map->add_option("--series", map_source,
                    "series file or builtin (ellipse:M1,M2 | halfplane)")
        ->required();
    map->add_option("--n-boundary", map_n_boundary, "boundary samples");
    map->add_option("--n-interior", map_n_interior,
                    "interior samples per circle (0 = boundary only)");
    map->add_option("--interior-radii", map_radii,
                    "interior circle radii (default 0.1..0.9)");
    std::string map_format = "csv";
    map->add_option("--format", map_format, "csv | json");
    map->add_option("--output,-o", map_out, "CSV path ('-' = stdout)");

    // check-sub
    auto* sub = app.add_subcommand("check-sub", "strong/weak subordination check");
    std::string sub_f, sub_F, sub_domain;
    int sub_n_radii = 16, sub_n_angles = 256;
    sub->add_option("--f", sub_f, "candidate series file")->required();
    sub->add_option("--F", sub_F, "target series file or builtin")->required();
    sub->add_option("--domain", sub_domain,
                    "target image (halfplane:c | disk:cx,cy,r | ellipse:cx,cy,a,b); "
                    "defaults to the map's own image");
    sub->add_option("--resolution", sub_n_angles, "angles per circle");
    sub->add_option("--radii", sub_n_radii, "number of circles");
    double sub_tol = 1e-9;
    sub->add_option("--tol", sub_tol, "center-match tolerance");
    std::string sub_out;
    sub->add_option("--output,-o", sub_out, "report path");

    // check-admissible
    auto* adm = app.add_subcommand("check-admissible", "admissibility scan");
    std::string adm_psi = "r+s", adm_q, adm_domain, adm_out, adm_variant = "lemma";
    AdmissibilityScanConfig adm_cfg;
    adm->add_option("--psi", adm_psi, "r+s | r+s+t | r | affine:...");
    adm->add_option("--q", adm_q, "series file or builtin")->required();
    adm->add_option("--omega", adm_domain, "target region")->required();
    adm->add_option("--resolution", adm_cfg.n_zeta, "boundary angles");
    adm->add_option("--m-max", adm_cfg.m_max, "upper end of the m grid");
    adm->add_option("--n-m", adm_cfg.n_m, "m grid size");
    adm->add_option("--variant", adm_variant, "lemma | definition");
    adm->add_option("--output,-o", adm_out, "report path");

    // jack-probe
    auto* jack = app.add_subcommand("jack-probe", "boundary-contact probe");
    std::string jack_p, jack_q, jack_out;
    double jack_tol = 1e-4;
    jack->add_option("--p", jack_p, "series file")->required();
    jack->add_option("--q", jack_q, "series file or builtin")->required();
    jack->add_option("--tol", jack_tol, "bisection tolerance in radius");
    jack->add_option("--output,-o", jack_out, "report path");

    // verify-example
    auto* vex = app.add_subcommand("verify-example", "run a bundled scenario");
    int vex_id = 0;
    double vex_M1 = 0.8, vex_M2 = 0.4;
    int vex_resolution = 0, vex_nm = 0;
    std::string vex_out;
    vex->add_option("id", vex_id, "scenario id (1..4)")->required();
    vex->add_option("--M1", vex_M1, "M1 parameter");
    vex->add_option("--M2", vex_M2, "M2 parameter");
    vex->add_option("--resolution", vex_resolution, "boundary angles override");
    vex->add_option("--m-count", vex_nm, "m grid size override");
    vex->add_option("--output,-o", vex_out, "machine report path");

    CLI11_PARSE(app, argc, argv);
    ropt.include_timestamp = !no_timestamp;

    try {
        if (*ops) {
            const HarmonicSeries in = load_series(ops_in);
            Operator op;
            if (ops_operator == "D")
                op = Operator::D;
            else if (ops_operator == "Dfrak")
                op = Operator::Dfrak;
            else
                throw Error("ops: operator must be D or Dfrak");
            const HarmonicSeries out = apply_Dn(in, ops_order, op);
            print_coefficient_table(out);
            write_text(ops_out.empty() ? "-" : ops_out, serialize(out) + "\n");
            return 0;
        }

        if (*map) {
            const BoundaryMapQ bq = load_map(map_source);
            if (map_radii.empty())
                for (int i = 1; i <= 9; ++i)
                    map_radii.push_back(0.1 * i);
            const DiskImage img = bq.image_of_disk(
                map_n_boundary, map_n_interior > 0 ? map_radii : std::vector<double>{},
                map_n_interior);
            std::string text;
            if (map_format == "csv") {
                std::ostringstream csv;
                write_map_csv(csv, img);
                text = csv.str();
            } else if (map_format == "json") {
                text = render_map_json(img, !no_timestamp);
            } else {
                throw Error("map: --format must be csv or json");
            }
            write_text(map_out.empty() ? "-" : map_out, text);
            return 0;
        }

        if (*sub) {
            const HarmonicSeries f = load_series(sub_f);
            const BoundaryMapQ F = load_map(sub_F);
            const DomainSpec image =
                sub_domain.empty() ? F.image_domain() : parse_domain(sub_domain);
            SubResolution res;
            res.n_radii = sub_n_radii;
            res.n_angles = sub_n_angles;
            res.center_tol = sub_tol;
            const SubordinationVerdict v = check_subordination(
                HarmonicFunction::from_series(f, "f"), F.map(), image, res);
            write_text(sub_out.empty() ? "-" : sub_out, render_report(v, ropt));
            return v.relation == Relation::none ? 1 : 0;
        }

        if (*adm) {
            adm_cfg.variant = adm_variant == "definition"
                                  ? ConeVariant::definition_form
                                  : ConeVariant::lemma_form;
            if (adm_variant != "lemma" && adm_variant != "definition")
                throw Error("check-admissible: --variant must be lemma or definition");
            const ScanReport r = scan_admissibility(
                parse_psi(adm_psi), load_map(adm_q), parse_domain(adm_domain), adm_cfg);
            write_text(adm_out.empty() ? "-" : adm_out, render_report(r, ropt));
            return r.found_violation() ? 1 : 0;
        }

        if (*jack) {
            const HarmonicSeries p = load_series(jack_p);
            JackResolution res;
            res.r_tol = jack_tol;
            const auto w = jack_probe(HarmonicFunction::from_series(p, "p"),
                                      load_map(jack_q), res);
            if (w) {
                write_text(jack_out.empty() ? "-" : jack_out,
                           render_report(*w, ropt));
                return 1; // crossing found
            }
            write_text(jack_out.empty() ? "-" : jack_out,
                       render_no_witness("jack_witness", ropt));
            return 0;
        }

        if (*vex) {
            ExampleConfig cfg;
            cfg.id = vex_id;
            cfg.M1 = vex_M1;
            cfg.M2 = vex_M2;
            if (vex_resolution > 0 || vex_nm > 0) {
                AdmissibilityScanConfig sc;
                if (vex_resolution > 0)
                    sc.n_zeta = vex_resolution;
                if (vex_nm > 0)
                    sc.n_m = vex_nm;
                cfg.scan_override = sc;
            }
            const ExampleReport r = run_example(cfg);
            for (const auto& c : r.checks)
                std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")")
                          << '\n';
            std::cout << "example " << r.id << ": " << (r.pass ? "PASS" : "FAIL")
                      << '\n';
            if (!vex_out.empty())
                write_text(vex_out, render_report(r, ropt));
            return r.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
