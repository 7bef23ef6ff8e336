#include "ffht/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffht/text.hpp"

namespace ffht::cli {

namespace {

using nlohmann::ordered_json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PlanFlags {
    int64_t p = 0;
    int r = 1;
    int m = 1;
    std::string modulus;
    std::string base_modulus;
    std::string alpha;
    int64_t n = 0;
};

struct IoFlags {
    std::string format = "text";
    std::string out_path;
};

void add_plan_flags(CLI::App* sub, PlanFlags& f) {
    sub->add_option("--p", f.p, "field characteristic, an odd prime")->required();
    sub->add_option("--r", f.r, "base field degree (default 1)");
    sub->add_option("--m", f.m, "extension degree over the base (default 1)");
    sub->add_option("--modulus", f.modulus,
                    "modulus polynomial of the working field GF(p^(r*m))");
    sub->add_option("--base-modulus", f.base_modulus,
                    "base field modulus, used when r > 1 and m > 1");
    sub->add_option("--alpha", f.alpha, "kernel element in the working field");
    sub->add_option("--n", f.n, "kernel order N");
}

void add_io_flags(CLI::App* sub, IoFlags& io) {
    sub->add_option("--format", io.format, "output format (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", io.out_path, "write output to a file instead of stdout");
}

std::shared_ptr<const Field> resolve_base(const PlanFlags& f) {
    if (f.m == 1) {
        if (!f.base_modulus.empty())
            throw usage_error("--base-modulus applies only when --m > 1; use --modulus");
        if (!f.modulus.empty()) return Field::make(f.p, f.r, parse_poly(f.modulus));
        return Field::make(f.p, f.r);
    }
    if (!f.base_modulus.empty()) return Field::make(f.p, f.r, parse_poly(f.base_modulus));
    return Field::make(f.p, f.r);
}

std::shared_ptr<const TransformPlan> resolve_plan(const PlanFlags& f,
                                                  std::optional<int64_t> inferred_n) {
    PlanSpec spec;
    spec.base = resolve_base(f);
    spec.m = f.m;
    if (f.m > 1 && !f.modulus.empty()) spec.ext_modulus = parse_poly(f.modulus);
    if (!f.alpha.empty()) spec.alpha = parse_poly(f.alpha);
    if (f.n > 0)
        spec.n = f.n;
    else if (inferred_n)
        spec.n = *inferred_n;
    return TransformPlan::make(std::move(spec));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline flag and --in are mutually exclusive; exactly one must be given.
std::string take_input(const std::string& inline_text, const std::string& in_path,
                       const char* what) {
    if (!inline_text.empty() && !in_path.empty())
        throw usage_error(std::string(what) + " conflicts with its file variant; give one");
    if (inline_text.empty() && in_path.empty())
        throw usage_error(std::string("missing ") + what);
    return in_path.empty() ? inline_text : slurp(in_path);
}

/// Entry count of a comma-separated list, used to infer N before the
/// field needed to parse the entries exists.
int64_t count_entries(std::string_view text) {
    int64_t count = 1;
    for (char c : text)
        if (c == ',') ++count;
    return count;
}

void emit(const IoFlags& io, std::ostream& out, const std::string& text) {
    if (io.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(io.out_path, std::ios::binary);
    if (!f) throw usage_error("cannot open output file: " + io.out_path);
    f << text;
}

std::string join_int64(const std::vector<int64_t>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(xs[i]);
    }
    return out;
}

ordered_json plan_json(const TransformPlan& plan) {
    return ordered_json{
        {"p", plan.base().characteristic()},
        {"r", plan.base().degree()},
        {"m", plan.m()},
        {"base_modulus", render_poly(plan.base().modulus())},
        {"modulus", render_poly(plan.ext().modulus())},
        {"alpha", to_string(plan.trig().alpha())},
        {"n", plan.n()},
    };
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

std::string render_values_doc(const TransformPlan& plan, const std::vector<GiElement>& values,
                              const std::string& format) {
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const GiElement& v : values) arr.push_back(render_gi(v));
        return dump(ordered_json{{"plan", plan_json(plan)}, {"values", std::move(arr)}});
    }
    return render_values(values) + "\n";
}

std::string cmd_field_info(const PlanFlags& f, const std::string& format) {
    auto field = f.modulus.empty() ? Field::make(f.p, f.r)
                                   : Field::make(f.p, f.r, parse_poly(f.modulus));
    const int64_t unit = field->card() - 1;
    if (format == "json") {
        return dump(ordered_json{
            {"p", field->characteristic()},
            {"r", field->degree()},
            {"cardinality", field->card()},
            {"modulus", render_poly(field->modulus())},
            {"unit_order", unit},
            {"unit_order_factors", field->unit_order_factors()},
        });
    }
    std::ostringstream ss;
    ss << "field: GF(" << field->characteristic();
    if (field->degree() > 1) ss << "^" << field->degree();
    ss << ")\n";
    ss << "modulus: " << render_poly(field->modulus()) << "\n";
    ss << "cardinality: " << field->card() << "\n";
    ss << "unit order: " << unit << "\n";
    ss << "unit order factors: " << join_int64(field->unit_order_factors()) << "\n";
    return ss.str();
}

std::string cmd_trig_table(const PlanFlags& f, const std::string& format) {
    auto plan = resolve_plan(f, std::nullopt);
    if (format == "json") {
        TrigTables tables = plan->trig().table();
        auto grid = [](const std::vector<std::vector<GiElement>>& g) {
            ordered_json rows = ordered_json::array();
            for (const auto& row : g) {
                ordered_json cells = ordered_json::array();
                for (const GiElement& x : row) cells.push_back(render_gi(x));
                rows.push_back(std::move(cells));
            }
            return rows;
        };
        return dump(ordered_json{{"cos", grid(tables.cos)}, {"sin", grid(tables.sin)}});
    }
    return render_trig_grids(plan->trig());
}

std::string cmd_forward(const PlanFlags& f, const std::string& input, const std::string& format) {
    auto plan = resolve_plan(f, count_entries(input));
    Signal v = make_signal(plan, parse_values(input, plan->ext()));
    Spectrum V = forward(*plan, v);
    return render_values_doc(*plan, V.values, format);
}

std::string cmd_inverse(const PlanFlags& f, const std::string& input, const std::string& format) {
    auto plan = resolve_plan(f, count_entries(input));
    Spectrum V = make_spectrum(plan, parse_values(input, plan->ext()));
    Signal v = inverse(*plan, V);
    return render_values_doc(*plan, v.values, format);
}

std::string cmd_conv(const PlanFlags& f, const std::string& g_text, const std::string& v_text,
                     const std::string& format) {
    auto plan = resolve_plan(f, count_entries(g_text));
    Signal g = make_signal(plan, parse_values(g_text, plan->ext()));
    Signal v = make_signal(plan, parse_values(v_text, plan->ext()));
    Signal w = convolve_spectral(*plan, g, v);
    return render_values_doc(*plan, w.values, format);
}

std::string cmd_shift(const PlanFlags& f, const std::string& input, int64_t d,
                      const std::string& format) {
    auto plan = resolve_plan(f, count_entries(input));
    Spectrum G = make_spectrum(plan, parse_values(input, plan->ext()));
    Spectrum out = shift_spectrum(*plan, G, d);
    return render_values_doc(*plan, out.values, format);
}

std::string cmd_validate(const PlanFlags& f, const std::string& input,
                         const std::string& format) {
    auto plan = resolve_plan(f, count_entries(input));
    Spectrum V = make_spectrum(plan, parse_values(input, plan->ext()));
    const bool ok = is_valid_spectrum(*plan, V);
    if (format == "json") return dump(ordered_json{{"plan", plan_json(*plan)}, {"valid", ok}});
    return ok ? "valid\n" : "invalid\n";
}

std::string cmd_classes(int64_t n, int64_t q, const std::string& format) {
    CyclotomicPartition part = cyclotomic_classes(n, q);
    if (format == "json")
        return dump(ordered_json{{"N", part.n}, {"q", part.q}, {"classes", part.classes}});
    return render_partition(part) + "\n";
}

std::string cmd_expand(const PlanFlags& f, const std::string& input, const std::string& format) {
    auto plan = resolve_plan(f, std::nullopt);
    auto assignments = parse_assignments(input, plan->ext());
    Spectrum V = expand_spectrum(plan, assignments);
    return render_values_doc(*plan, V.values, format);
}

std::string cmd_find_alpha(const PlanFlags& f, const std::string& format) {
    auto plan = resolve_plan(f, std::nullopt);
    if (format == "json")
        return dump(ordered_json{{"alpha", to_string(plan->trig().alpha())}, {"order", plan->n()}});
    return "alpha: " + to_string(plan->trig().alpha()) + "\norder: " + std::to_string(plan->n()) +
           "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact trigonometry and Hartley transforms over finite fields"};
    app.require_subcommand(1);

    PlanFlags f;
    IoFlags io;
    std::string signal_text, spectrum_text, g_text, v_text, assign_text;
    std::string in_path, g_in, v_in;
    int64_t shift_d = 0;
    int64_t cls_n = 0, cls_q = 0;

    auto* sc_field = app.add_subcommand("field-info", "describe GF(p^r)");
    sc_field->add_option("--p", f.p, "field characteristic, an odd prime")->required();
    sc_field->add_option("--r", f.r, "field degree (default 1)");
    sc_field->add_option("--modulus", f.modulus, "modulus polynomial; generated when absent");
    add_io_flags(sc_field, io);

    auto* sc_trig = app.add_subcommand("trig-table", "render the cos_k(i) and sin_k(i) grids");
    add_plan_flags(sc_trig, f);
    add_io_flags(sc_trig, io);

    auto* sc_fwd = app.add_subcommand("forward", "transform a signal to the Hartley domain");
    add_plan_flags(sc_fwd, f);
    sc_fwd->add_option("--signal", signal_text, "comma-separated signal values");
    sc_fwd->add_option("--in", in_path, "read the signal from a file");
    add_io_flags(sc_fwd, io);

    auto* sc_inv = app.add_subcommand("inverse", "transform a spectrum back to the time domain");
    add_plan_flags(sc_inv, f);
    sc_inv->add_option("--spectrum", spectrum_text, "comma-separated spectrum values");
    sc_inv->add_option("--in", in_path, "read the spectrum from a file");
    add_io_flags(sc_inv, io);

    auto* sc_conv = app.add_subcommand("conv", "cyclic convolution through the Hartley domain");
    add_plan_flags(sc_conv, f);
    sc_conv->add_option("--g", g_text, "first signal");
    sc_conv->add_option("--v", v_text, "second signal");
    sc_conv->add_option("--g-in", g_in, "read the first signal from a file");
    sc_conv->add_option("--v-in", v_in, "read the second signal from a file");
    add_io_flags(sc_conv, io);

    auto* sc_shift = app.add_subcommand("shift", "spectrum of the cyclically delayed signal");
    add_plan_flags(sc_shift, f);
    sc_shift->add_option("--spectrum", spectrum_text, "comma-separated spectrum values");
    sc_shift->add_option("--in", in_path, "read the spectrum from a file");
    sc_shift->add_option("--d", shift_d, "delay in samples")->required();
    add_io_flags(sc_shift, io);

    auto* sc_val = app.add_subcommand("validate",
                                      "check whether a spectrum comes from a base-field signal");
    add_plan_flags(sc_val, f);
    sc_val->add_option("--spectrum", spectrum_text, "comma-separated spectrum values");
    sc_val->add_option("--in", in_path, "read the spectrum from a file");
    add_io_flags(sc_val, io);

    auto* sc_cls = app.add_subcommand("classes", "cyclotomic classes of k -> (-q*k) mod N");
    sc_cls->add_option("--n", cls_n, "transform length N")->required();
    sc_cls->add_option("--q", cls_q, "base field cardinality q")->required();
    add_io_flags(sc_cls, io);

    auto* sc_exp = app.add_subcommand("expand",
                                      "rebuild a full valid spectrum from class representatives");
    add_plan_flags(sc_exp, f);
    sc_exp->add_option("--assign", assign_text, "k=value pairs, comma-separated");
    sc_exp->add_option("--in", in_path, "read the assignments from a file");
    add_io_flags(sc_exp, io);

    auto* sc_find = app.add_subcommand("find-alpha", "deterministic kernel element of order N");
    add_plan_flags(sc_find, f);
    add_io_flags(sc_find, io);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: Usage: " << e.what() << "\n";
        return 2;
    }

    try {
        std::string text;
        if (*sc_field) {
            text = cmd_field_info(f, io.format);
        } else if (*sc_trig) {
            text = cmd_trig_table(f, io.format);
        } else if (*sc_fwd) {
            text = cmd_forward(f, take_input(signal_text, in_path, "--signal"), io.format);
        } else if (*sc_inv) {
            text = cmd_inverse(f, take_input(spectrum_text, in_path, "--spectrum"), io.format);
        } else if (*sc_conv) {
            text = cmd_conv(f, take_input(g_text, g_in, "--g"), take_input(v_text, v_in, "--v"),
                            io.format);
        } else if (*sc_shift) {
            text = cmd_shift(f, take_input(spectrum_text, in_path, "--spectrum"), shift_d,
                             io.format);
        } else if (*sc_val) {
            text = cmd_validate(f, take_input(spectrum_text, in_path, "--spectrum"), io.format);
        } else if (*sc_cls) {
            text = cmd_classes(cls_n, cls_q, io.format);
        } else if (*sc_exp) {
            text = cmd_expand(f, take_input(assign_text, in_path, "--assign"), io.format);
        } else if (*sc_find) {
            text = cmd_find_alpha(f, io.format);
        }
        emit(io, out, text);
        return 0;
    } catch (const usage_error& e) {
        err << "error: Usage: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace ffht::cli
