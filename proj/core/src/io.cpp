#include "dtev/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dtev {

namespace {

using nlohmann::json;

// The writer is hand-rolled so that numbers always serialize as %.17g and
// key order is fixed; load followed by save is then byte-identical.
class Writer {
  public:
    void begin() { out_ << "{\n"; }
    std::string end() {
        out_ << "\n}\n";
        return out_.str();
    }

    void field(const std::string& key, const std::string& raw) {
        sep();
        out_ << "  \"" << key << "\": " << raw;
    }
    void str(const std::string& key, const std::string& value) { field(key, "\"" + value + "\""); }
    void num(const std::string& key, int value) { field(key, std::to_string(value)); }
    void complex_field(const std::string& key, Complex z) { field(key, format_complex(z)); }
    void array(const std::string& key, const std::vector<Complex>& zs) {
        std::ostringstream a;
        a << "[";
        for (std::size_t i = 0; i < zs.size(); ++i) {
            if (i) a << ", ";
            a << format_complex(zs[i]);
        }
        a << "]";
        field(key, a.str());
    }

  private:
    void sep() {
        if (!first_) out_ << ",\n";
        first_ = false;
    }
    std::ostringstream out_;
    bool first_ = true;
};

Complex parse_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput(std::string("file: ") + what + " must be a [re, im] pair");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

std::vector<Complex> parse_array(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string("file: ") + what + " must be an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(parse_complex(e, what));
    return out;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) throw InvalidInput("file: not a JSON object");
    return j;
}

const json& get(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(std::string("file: missing field '") + key + "'");
    return *it;
}

int get_size(const json& j) {
    const json& l = get(j, "l");
    if (!l.is_number_integer() || l.get<int>() < 1)
        throw InvalidInput("file: l must be a positive integer");
    return l.get<int>();
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string save_instance(const Instance& inst) {
    Writer w;
    w.begin();
    if (const auto* s = std::get_if<StandardCoeffs>(&inst)) {
        w.str("kind", "standard");
        w.num("l", s->l);
        w.array("a", s->a);
        w.array("b", s->b);
    } else if (const auto* t = std::get_if<TransmissionInstance>(&inst)) {
        w.str("kind", "transmission");
        w.num("l", t->l);
        w.array("alpha", t->alpha);
        w.array("beta", t->beta);
        w.array("alpha_dot", t->alpha_dot);
        w.array("beta_dot", t->beta_dot);
    } else if (const auto* j = std::get_if<SymmetricJacobi>(&inst)) {
        w.str("kind", "symmetric");
        w.num("l", j->l);
        w.array("A", j->A);
        w.array("B", j->B);
    } else if (const auto* td = std::get_if<TransmissionData>(&inst)) {
        w.str("kind", "transmission-data");
        w.num("l", td->l);
        w.array("alpha_dot", td->alpha_dot);
        w.array("beta_dot", td->beta_dot);
        w.complex_field("alpha_l", td->alpha_l);
    } else {
        const auto& h = std::get<SymmetricHead>(inst);
        w.str("kind", "symmetric-head");
        w.num("l", h.l);
        w.array("A", h.A);
        w.array("B", h.B);
    }
    return w.end();
}

std::string save_spectrum(const SpectrumFile& sp) {
    Writer w;
    w.begin();
    w.str("kind", "spectrum");
    if (sp.two_spectra) {
        w.array("mu", sp.mu);
        w.array("nu", sp.nu);
    } else {
        w.array("eigenvalues", sp.eigenvalues);
    }
    return w.end();
}

std::string save_weyl(const WeylFile& wf) {
    Writer w;
    w.begin();
    w.str("kind", "weyl");
    w.num("l", wf.l);
    w.array("M", wf.M);
    return w.end();
}

std::string save_boundary(const BoundaryPolys& B) {
    Writer w;
    w.begin();
    w.str("kind", "boundary");
    w.str("config", B.config == BoundaryConfig::full ? "full" : "hochstadt");
    w.array("R0", B.R0.coeffs());
    w.array("R1", B.R1.coeffs());
    return w.end();
}

std::string save_poly(const Poly& p) {
    Writer w;
    w.begin();
    w.str("kind", "poly");
    w.array("coeffs", p.coeffs());
    return w.end();
}

Instance load_instance(const std::string& text) {
    const json j = parse_document(text);
    const std::string kind = get(j, "kind").get<std::string>();
    const int l = get_size(j);

    auto sized = [&](const char* key, int want) {
        std::vector<Complex> v = parse_array(get(j, key), key);
        if (static_cast<int>(v.size()) != want) {
            std::ostringstream msg;
            msg << "file: field '" << key << "' must have " << want << " entries";
            throw InvalidInput(msg.str());
        }
        return v;
    };

    if (kind == "standard") {
        return StandardCoeffs::make(sized("a", l), sized("b", l));
    }
    if (kind == "transmission") {
        return TransmissionInstance::make(sized("alpha", l), sized("beta", l),
                                          sized("alpha_dot", l), sized("beta_dot", l));
    }
    if (kind == "symmetric") {
        return SymmetricJacobi::make(sized("A", l - 1), sized("B", l));
    }
    if (kind == "transmission-data") {
        TransmissionData td;
        td.l = l;
        td.alpha_dot = sized("alpha_dot", l);
        td.beta_dot = sized("beta_dot", l);
        td.alpha_l = parse_complex(get(j, "alpha_l"), "alpha_l");
        for (const auto& a : td.alpha_dot)
            if (a == Complex(0.0)) throw InvalidInput("transmission-data: alpha_dot_n is zero");
        if (td.alpha_l == Complex(0.0)) throw InvalidInput("transmission-data: alpha_l is zero");
        if (td.alpha_l == td.alpha_dot.back())
            throw InvalidInput("transmission-data: alpha_l equals alpha_dot_l");
        return td;
    }
    if (kind == "symmetric-head") {
        if (l % 2 == 0) throw InvalidInput("symmetric-head: l must be odd (l = 2m - 1)");
        const int m = (l + 1) / 2;
        SymmetricHead h;
        h.l = l;
        h.A = sized("A", m - 1);
        h.B = sized("B", m - 1);
        for (const auto& a : h.A)
            if (a == Complex(0.0)) throw InvalidInput("symmetric-head: A_n is zero");
        return h;
    }
    throw InvalidInput("file: unknown instance kind '" + kind + "'");
}

SpectrumFile load_spectrum(const std::string& text) {
    const json j = parse_document(text);
    if (get(j, "kind").get<std::string>() != "spectrum")
        throw InvalidInput("file: expected kind 'spectrum'");
    SpectrumFile sp;
    if (j.contains("mu") || j.contains("nu")) {
        sp.two_spectra = true;
        sp.mu = parse_array(get(j, "mu"), "mu");
        sp.nu = parse_array(get(j, "nu"), "nu");
        if (sp.nu.size() + 1 != sp.mu.size())
            throw InvalidInput("spectrum: nu must have one fewer eigenvalue than mu");
    } else {
        sp.eigenvalues = parse_array(get(j, "eigenvalues"), "eigenvalues");
    }
    return sp;
}

WeylFile load_weyl(const std::string& text) {
    const json j = parse_document(text);
    if (get(j, "kind").get<std::string>() != "weyl")
        throw InvalidInput("file: expected kind 'weyl'");
    WeylFile w;
    w.l = get_size(j);
    w.M = parse_array(get(j, "M"), "M");
    if (static_cast<int>(w.M.size()) != 2 * w.l)
        throw InvalidInput("weyl: M must have 2l entries");
    return w;
}

BoundaryPolys load_boundary(const std::string& text) {
    const json j = parse_document(text);
    if (get(j, "kind").get<std::string>() != "boundary")
        throw InvalidInput("file: expected kind 'boundary'");
    BoundaryPolys B;
    const std::string config = get(j, "config").get<std::string>();
    if (config == "full")
        B.config = BoundaryConfig::full;
    else if (config == "hochstadt")
        B.config = BoundaryConfig::hochstadt;
    else
        throw InvalidInput("boundary: config must be 'full' or 'hochstadt'");
    B.R0 = Poly(parse_array(get(j, "R0"), "R0"));
    B.R1 = Poly(parse_array(get(j, "R1"), "R1"));
    B.validate();
    return B;
}

Poly load_poly(const std::string& text) {
    const json j = parse_document(text);
    if (get(j, "kind").get<std::string>() != "poly")
        throw InvalidInput("file: expected kind 'poly'");
    return Poly(parse_array(get(j, "coeffs"), "coeffs"));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace dtev
