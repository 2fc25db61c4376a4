#include "specktral/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kernels.hpp"
#include "specktral/codes.hpp"
#include "specktral/constructions.hpp"
#include "specktral/covering.hpp"
#include "specktral/fourier.hpp"
#include "specktral/identities.hpp"
#include "specktral/io.hpp"
#include "specktral/krawtchouk.hpp"

namespace specktral::cli {

namespace {

using nlohmann::json;

json number(double v) {
    if (!std::isfinite(v)) return format_double(v);
    return std::stod(format_double(v));
}

json exact(const BigInt& v) { return to_string(v); }
json exact(const Rational& v) { return to_string(v); }

template <class T>
json exact_list(const std::vector<T>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(exact(v));
    return out;
}

json complex_value(std::complex<double> v) { return json::array({number(v.real()), number(v.imag())}); }

std::string row_string(std::span<const Elem> row, std::uint32_t q) {
    std::string s;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (q > 10 && j) s += ' ';
        s += std::to_string(row[j]);
    }
    return s;
}

std::string describe(const AffineCode& c) {
    const auto q = c.field().value();
    std::string s = "q=" + std::to_string(q) + " n=" + std::to_string(c.length()) + " k=" + std::to_string(c.dimension()) + " [";
    for (std::size_t r = 0; r < c.dimension(); ++r) {
        s += (r ? "," : "") + row_string(c.linear().generator().row(r), q);
    }
    s += "]";
    if (!c.is_linear()) s += " + " + row_string(c.offset().coords(), q);
    return s;
}

std::string describe(const LinearCode& c) { return describe(AffineCode(c)); }

json vector_json(const FqVector& v) { return json(std::vector<Elem>(v.coords().begin(), v.coords().end())); }

struct Report {
    std::string command;
    json items = json::array();

    void add(json item) { items.push_back(std::move(item)); }

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const json& i) {
            return !i.contains("pass") || i["pass"].get<bool>();
        }));
    }
    bool ok() const { return passed() == items.size(); }

    json to_json() const {
        return {{"command", command},
                {"items", items},
                {"summary", {{"total", items.size()}, {"passed", passed()}, {"failed", items.size() - passed()}}}};
    }
};

std::string csv_cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + csv_cell(v[i]);
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (auto it = v.begin(); it != v.end(); ++it) s += (s.empty() ? "" : ";") + it.key() + "=" + csv_cell(*it);
        return s;
    }
    return v.dump();
}

int emit(const Report& report, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        if (!report.items.empty()) {
            const auto& first = report.items.front();
            std::string header;
            for (auto it = first.begin(); it != first.end(); ++it) header += (header.empty() ? "" : ",") + it.key();
            out << header << '\n';
            for (const auto& item : report.items) {
                std::string line;
                bool start = true;
                for (auto it = first.begin(); it != first.end(); ++it) {
                    line += (start ? "" : ",") + (item.contains(it.key()) ? csv_cell(item[it.key()]) : "");
                    start = false;
                }
                out << line << '\n';
            }
        }
    } else {
        out << report.to_json().dump(2) << '\n';
    }
    return report.ok() ? kExitOk : kExitFailed;
}

class Input {
public:
    Input(const std::string& path, std::istream& fallback) {
        if (path.empty() || path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (!file_) throw std::invalid_argument("cannot open " + path);
        stream_ = &file_;
    }
    std::istream& get() { return *stream_; }

private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

AffineCode load_code(const std::string& path, std::istream& in) {
    Input input(path, in);
    return read_code(input.get());
}

LinearCode load_linear(const std::string& path, std::istream& in) {
    auto c = load_code(path, in);
    if (!c.is_linear()) throw std::invalid_argument(path + ": expected a linear code (no offset line)");
    return c.linear();
}

json identity_item(const IdentityReport& r, const std::string& code) {
    return {{"identity", r.identity}, {"code", code}, {"lhs", exact_list(r.lhs)}, {"rhs", exact_list(r.rhs)}, {"pass", r.pass}};
}

void verify_code(Report& report, const LinearCode& c, double tol, const Limits& limits) {
    const auto name = describe(c);
    report.add(identity_item(verify_macwilliams(c, limits), name));
    report.add(identity_item(verify_transform_shells(c, tol, limits), name));
    report.add(identity_item(verify_harmonic_dual(c, limits), name));
    report.add(identity_item(verify_harmonic_indicator(c, 1, limits), name));
    if (c.field().value() == 2) report.add(identity_item(verify_harmonic_binary(c, limits), name));
}

DenseFunction load_function(const std::string& input, const std::string& code, std::optional<std::uint32_t> q,
                            std::optional<std::size_t> n, std::istream& in, const Limits& limits) {
    if (!code.empty()) return DenseFunction::indicator(load_code(code, in), limits);
    std::optional<Domain> fallback;
    if (q && n) fallback = Domain{*q, *n};
    Input source(input, in);
    return read_function(source.get(), fallback, limits);
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Limits limits;
    try {
        limits = Limits::from_env();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    CLI::App app{"Weight spectra, MacWilliams identities and extremal constructions over GF(q)", "specktral"};
    app.require_subcommand(1);

    std::string format = "json";
    double tol = kDefaultTolerance;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", tol, "Tolerance for floating-point checks")->check(CLI::NonNegativeNumber);
    };

    std::string code_path;

    auto* spectrum = app.add_subcommand("spectrum", "Weight distribution of a (linear or affine) code");
    spectrum->add_option("--code", code_path, "Code file, '-' for stdin")->default_val("-");
    add_common(spectrum);

    auto* dual_cmd = app.add_subcommand("dual", "Dual code");
    dual_cmd->add_option("--code", code_path, "Code file, '-' for stdin")->default_val("-");
    bool dual_as_code = false;
    dual_cmd->add_flag("--emit-code", dual_as_code, "Print the dual as a code file instead of a report");
    add_common(dual_cmd);

    auto* alpha_cmd = app.add_subcommand("alpha", "Largest single-weight coset fraction");
    std::string sub_path;
    alpha_cmd->add_option("--code", code_path, "Code file, '-' for stdin")->default_val("-");
    alpha_cmd->add_option("--sub", sub_path, "Subcode file: also check the coset-fraction bound it implies");
    add_common(alpha_cmd);

    auto* verify = app.add_subcommand("verify", "Run the identity suite");
    bool all_subspaces_flag = false;
    std::uint32_t vq = 2;
    std::size_t vn = 0;
    auto* verify_code_opt = verify->add_option("--code", code_path, "Code file, '-' for stdin");
    auto* all_opt = verify->add_flag("--all-subspaces", all_subspaces_flag, "Every subspace of GF(q)^n");
    verify->add_option("--q", vq, "Field order for --all-subspaces");
    verify->add_option("--n", vn, "Length for --all-subspaces");
    verify_code_opt->excludes(all_opt);
    add_common(verify);

    auto* construct = app.add_subcommand("construct", "Emit M(n,i), C(n) or g(n)");
    std::string what;
    std::size_t cn = 0, ci = 0;
    construct->add_option("object", what, "M, C or g")->required()->check(CLI::IsMember({"M", "C", "g"}));
    construct->add_option("--n", cn, "Length")->required();
    construct->add_option("--i", ci, "Zero padding for M")->default_val(0);

    auto* fourier_cmd = app.add_subcommand("fourier", "Character transform and its reports");
    std::string action = "report";
    std::string fn_input;
    std::string fourier_code;
    std::optional<std::uint32_t> fq;
    std::optional<std::size_t> fnn;
    fourier_cmd->add_option("action", action, "transform, eigen, support, uncertainty, sums or report")
        ->check(CLI::IsMember({"transform", "eigen", "support", "uncertainty", "sums", "report"}));
    fourier_cmd->add_option("--input", fn_input, "Function file, '-' for stdin")->default_val("-");
    fourier_cmd->add_option("--code", fourier_code, "Use the indicator of this code instead");
    fourier_cmd->add_option("--q", fq, "Field order when the function file has no header");
    fourier_cmd->add_option("--n", fnn, "Length when the function file has no header");
    add_common(fourier_cmd);

    auto* faces = app.add_subcommand("faces", "Faces of the cube meeting a code");
    std::string faces_action;
    std::optional<std::size_t> ft;
    faces->add_option("action", faces_action, "count or sections")->required()->check(CLI::IsMember({"count", "sections"}));
    faces->add_option("--code", code_path, "Code file, '-' for stdin")->default_val("-");
    faces->add_option("--t", ft, "Face dimension (sections: all when omitted)");
    add_common(faces);

    auto* kraw = app.add_subcommand("krawtchouk", "Table of P_k(m; n, q)");
    std::size_t kn = 0;
    std::uint64_t kq = 2;
    std::string kformat = "csv";
    kraw->add_option("--n", kn, "Length")->required();
    kraw->add_option("--q", kq, "Alphabet size (any integer >= 2)")->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 32));
    kraw->add_option("--format", kformat, "Output format")->check(CLI::IsMember({"json", "csv"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    Report report{join_args(args)};
    try {
        if (*spectrum) {
            const auto c = load_code(code_path, in);
            const auto w = weight_distribution(c, limits);
            report.add({{"code", describe(c)}, {"q", c.field().value()}, {"n", c.length()}, {"k", c.dimension()},
                        {"counts", exact_list(w.counts)}, {"total", exact(w.total())}});
            return emit(report, format, out);
        }
        if (*dual_cmd) {
            const auto c = load_linear(code_path, in);
            const auto d = dual(c);
            if (dual_as_code) {
                write_code(out, d);
                return kExitOk;
            }
            json gen = json::array();
            for (const auto& g : d.generators()) gen.push_back(vector_json(g));
            report.add({{"code", describe(c)}, {"dual", describe(d)}, {"k", d.dimension()}, {"generator", gen}});
            return emit(report, format, out);
        }
        if (*alpha_cmd) {
            const auto v = load_linear(code_path, in);
            const auto a = alpha(v, limits);
            report.add({{"code", describe(v)}, {"alpha", exact(a.value)}, {"weight", a.weight}, {"coset", vector_json(a.coset)}});
            if (!sub_path.empty()) {
                const auto u = load_linear(sub_path, in);
                const auto r = check_subspace_alpha_bound(u, v, limits);
                report.add({{"code", describe(u)},
                            {"alpha_sub", exact(r.alpha_u)},
                            {"bound", r.bound ? exact(*r.bound) : json(nullptr)},
                            {"max_ratio", exact(r.max_ratio)},
                            {"degenerate", r.degenerate},
                            {"pass", r.pass}});
            }
            return emit(report, format, out);
        }
        if (*verify) {
            if (all_subspaces_flag) {
                if (vn == 0) throw std::invalid_argument("--all-subspaces needs --n");
                for (const auto& c : all_subspaces(FieldOrder(vq), vn, limits)) verify_code(report, c, tol, limits);
            } else {
                verify_code(report, load_linear(code_path.empty() ? "-" : code_path, in), tol, limits);
            }
            return emit(report, format, out);
        }
        if (*construct) {
            if (what == "M") write_code(out, build_M(cn, ci));
            else if (what == "C") write_code(out, build_C(cn));
            else write_function(out, build_g(cn));
            return kExitOk;
        }
        if (*fourier_cmd) {
            const auto f = load_function(fn_input, fourier_code, fq, fnn, in, limits);
            if (action == "transform") {
                write_function(out, transform(f), tol);
                return kExitOk;
            }
            if (action == "eigen" || action == "report") {
                const auto e = eigenfunction_check(f, tol);
                report.add({{"check", "eigen"},
                            {"eigenvalue", e.eigenvalue ? json(*e.eigenvalue) : json(nullptr)},
                            {"residual", number(e.residual)}});
            }
            if (action == "support" || action == "report") {
                const auto s = support(f, tol);
                const auto sh = support(transform(f), tol);
                report.add({{"check", "support"}, {"support", s}, {"size", s.size()}, {"hat_size", sh.size()}});
            }
            if (action == "uncertainty" || action == "report") {
                const auto u = uncertainty_report(f, tol);
                report.add({{"check", "uncertainty"},
                            {"support_f", u.support_f},
                            {"support_hat", u.support_hat},
                            {"product", exact(u.product)},
                            {"bound", exact(u.bound)},
                            {"pass", u.pass}});
            }
            if (action == "sums") {
                const auto s = spectral_sums(f, tol);
                json a = json::array(), ah = json::array();
                for (auto v : s.a) a.push_back(complex_value(v));
                for (auto v : s.a_hat) ah.push_back(complex_value(v));
                report.add({{"check", "transform_shells"}, {"a", a}, {"a_hat", ah}, {"deviation", number(s.shell_deviation)}, {"pass", s.shells_hold}});
            }
            return emit(report, format, out);
        }
        if (*faces) {
            const auto c = load_code(code_path, in);
            if (faces_action == "count") {
                if (!ft) throw std::invalid_argument("faces count needs --t");
                const auto words = enumerate(c, limits);
                const auto hit = count_intersecting_faces(c.field(), c.length(), words, *ft, limits);
                const auto total = total_faces(c.field(), c.length(), *ft);
                report.add({{"t", *ft}, {"total_faces", exact(total)}, {"intersecting", exact(hit)}, {"score", exact(Rational(hit, total))}});
                return emit(report, format, out);
            }
            std::vector<std::size_t> dims;
            if (ft) dims.push_back(*ft);
            else for (std::size_t t = 0; t <= c.length(); ++t) dims.push_back(t);
            for (std::size_t t : dims) {
                check_face_guard(c.field(), c.length(), t, limits);
                for (const auto& free : detail::combinations(c.length(), t)) {
                    const auto r = check_face_sections(c, free, limits);
                    json hist = json::object();
                    for (const auto& [count, times] : r.histogram) hist[to_string(count)] = times;
                    report.add({{"t", t}, {"free", r.free}, {"histogram", hist},
                                {"s", r.exponent ? json(*r.exponent) : json(nullptr)}, {"pass", r.pass}});
                }
            }
            return emit(report, format, out);
        }
        if (*kraw) {
            if (kformat == "csv") {
                out << "k\\m";
                for (std::size_t m = 0; m <= kn; ++m) out << ',' << m;
                out << '\n';
                for (std::size_t k = 0; k <= kn; ++k) {
                    out << k;
                    for (std::size_t m = 0; m <= kn; ++m) out << ',' << krawtchouk(k, m, kn, kq);
                    out << '\n';
                }
                return kExitOk;
            }
            for (std::size_t k = 0; k <= kn; ++k) {
                std::vector<BigInt> row;
                for (std::size_t m = 0; m <= kn; ++m) row.push_back(krawtchouk(k, m, kn, kq));
                report.add({{"k", k}, {"values", exact_list(row)}});
            }
            return emit(report, "json", out);
        }
    } catch (const GuardExceeded& e) {
        err << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace specktral::cli
