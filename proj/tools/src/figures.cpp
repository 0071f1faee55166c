#include "supernorm_cli/figures.hpp"

#include "supernorm_cli/cli.hpp"

namespace supernorm::cli {
namespace {

using M = AsymptoticModel;

EnsembleSpec spec(Ensemble e, Mode m, Restriction r, Weight w) { return EnsembleSpec{e, m, r, w, 1.0}; }

std::vector<double> to_doubles(const CoeffSeries& s) {
    std::vector<double> v(s.length());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = s.value(n);
    return v;
}

}  // namespace

const std::vector<FigureDef>& figures() {
    static const std::vector<FigureDef> defs = {
        {"w-size", "W_size(n) against e^-gamma n", 70, {M::lehmer_linear}},
        {"w-size-1", "W*_size(n) (no ones) against e^-gamma", 40, {M::lehmer_const}},
        {"c-hat-max", "Chat_max(n) against e^gamma (log n + log log n)", 20, {M::log_loglog}},
        {"c-hat-per", "Chat_per(n) against e^gamma (log n + log log n) and e^gamma log n", 20,
         {M::log_loglog, M::log}},
        {"c-hat-size", "Chat_size(n) against e^gamma log n and e^gamma (log n + log log n)", 70,
         {M::log, M::log_loglog}},
        {"c-hat-size-loglog", "Chat_size(n) - e^gamma (log n + log log n) in the residual column", 70,
         {M::log_loglog}},
        {"w-hat-size", "What_size(n) against e^gamma / n", 70, {M::inv}},
        {"w-hat-per", "What_per(n) against e^gamma / n", 20, {M::inv}},
        {"ww-product", "W_size(n) What_size(n) against 1", 70, {M::unit}},
        {"w-per", "W_per(n) against n and e^-gamma n", 20, {M::ident, M::lehmer_linear}},
    };
    return defs;
}

std::optional<FigureDef> find_figure(std::string_view id) {
    for (const auto& f : figures()) {
        if (f.id == id) return f;
    }
    return std::nullopt;
}

std::vector<double> figure_values(const PrimeTable& table, const FigureDef& def) {
    using E = Ensemble;
    using R = Restriction;
    using W = Weight;
    const auto exact = [&](EnsembleSpec s) { return to_doubles(evaluate(table, s, def.nmax, Backend::exact)); };
    const std::string_view id = def.id;
    if (id == "w-size") return exact(spec(E::size, Mode::individual, R::all, W::norm));
    if (id == "w-size-1") return exact(spec(E::size, Mode::individual, R::no_ones, W::norm));
    if (id == "c-hat-max") return exact(spec(E::max_part, Mode::cumulative, R::all, W::supernorm));
    if (id == "c-hat-per") return exact(spec(E::perimeter, Mode::cumulative, R::all, W::supernorm));
    if (id == "c-hat-size" || id == "c-hat-size-loglog") {
        return exact(spec(E::size, Mode::cumulative, R::all, W::supernorm));
    }
    if (id == "w-hat-size") return exact(spec(E::size, Mode::individual, R::all, W::supernorm));
    if (id == "w-hat-per") return exact(spec(E::perimeter, Mode::individual, R::all, W::supernorm));
    if (id == "w-per") return exact(spec(E::perimeter, Mode::individual, R::all, W::norm));
    // ww-product: multiply exactly, round once.
    const auto w = evaluate(table, spec(E::size, Mode::individual, R::all, W::norm), def.nmax, Backend::exact);
    const auto wh =
        evaluate(table, spec(E::size, Mode::individual, R::all, W::supernorm), def.nmax, Backend::exact);
    std::vector<double> v(def.nmax + 1);
    for (std::uint64_t n = 0; n <= def.nmax; ++n) v[n] = to_double(Rational(w.exact[n] * wh.exact[n]));
    return v;
}

void write_figure(std::ostream& out, const PrimeTable& table, const FigureDef& def) {
    const auto values = figure_values(table, def);
    const MathConstants& c = math_constants();
    out << "n,stat,asymptotic,residual";
    if (def.curves.size() > 1) out << ",asymptotic2,residual2";
    out << '\n';
    for (std::uint64_t n = 1; n <= def.nmax; ++n) {
        out << n << ',' << format_double(values[n]);
        for (const AsymptoticModel model : def.curves) {
            if (n < domain_start(model)) {
                out << ",,";
                continue;
            }
            const double p = predictor(c, model, n);
            out << ',' << format_double(p) << ',' << format_double(values[n] - p);
        }
        out << '\n';
    }
}

}  // namespace supernorm::cli
