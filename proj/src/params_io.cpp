// Key-value parameter documents and small text-file helpers.
#include "fragcode/params_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fragcode/errors.hpp"

namespace fragcode {
namespace {

// Parsed document: the kind line plus integer fields in declaration order.
struct KvDoc {
    std::string kind;
    std::map<std::string, long long> fields;
    std::map<std::string, bool> used;

    long long take(const std::string& key) {
        const auto it = fields.find(key);
        if (it == fields.end()) throw FormatError("missing field " + key);
        used[key] = true;
        return it->second;
    }

    void match(const std::string& key, long long expected) {
        if (take(key) != expected)
            throw FormatError("field " + key + " disagrees with the derivation");
    }

    void finish() const {
        for (const auto& [key, value] : fields) {
            (void)value;
            if (!used.count(key)) throw FormatError("unknown field " + key);
        }
    }
};

KvDoc parse_kv(const std::string& text) {
    KvDoc doc;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (first) {
            if (key != "kind")
                throw FormatError("parameter documents start with a kind line");
            std::string kind, extra;
            if (!(ls >> kind) || (ls >> extra))
                throw FormatError("malformed kind line");
            doc.kind = kind;
            first = false;
            continue;
        }
        long long value = 0;
        std::string extra;
        if (key.empty() || key == "kind" || !(ls >> value) || (ls >> extra))
            throw FormatError("malformed line: " + line);
        if (doc.fields.count(key)) throw FormatError("duplicate field " + key);
        doc.fields[key] = value;
    }
    if (first) throw FormatError("empty parameter document");
    return doc;
}

ParamsKind kind_of(const std::string& name) {
    if (name == "2d") return ParamsKind::TwoD;
    if (name == "3d") return ParamsKind::ThreeD;
    if (name == "robust") return ParamsKind::Robust;
    throw FormatError("unknown parameter kind " + name);
}

void expect_kind(const KvDoc& doc, const char* want) {
    if (doc.kind != want)
        throw FormatError(std::string("expected a ") + want +
                          " parameter document, got " + doc.kind);
}

void put(std::ostringstream& out, const char* key, long long value) {
    out << key << ' ' << value << '\n';
}

} // namespace

std::string params_to_kv(const CodeParams2D& p) {
    std::ostringstream out;
    out << "kind 2d\n";
    put(out, "q", p.q);
    put(out, "M", p.M);
    put(out, "h", p.h);
    put(out, "n", p.n);
    put(out, "d", p.d);
    put(out, "m", p.m);
    put(out, "mPrime", p.mPrime);
    put(out, "R", p.R);
    put(out, "idxWidth", p.idxWidth);
    put(out, "k", p.k);
    return out.str();
}

std::string params_to_kv(const CodeParams3D& p) {
    std::ostringstream out;
    out << "kind 3d\n";
    put(out, "q", p.q);
    put(out, "M", p.M);
    put(out, "h", p.h);
    put(out, "n", p.n);
    put(out, "nPrime", p.nPrime);
    put(out, "d", p.d);
    put(out, "c", p.c);
    put(out, "a", p.a);
    put(out, "b", p.b);
    put(out, "colorCount", p.colorCount);
    put(out, "R", p.R);
    put(out, "idxWidth", p.idxWidth);
    put(out, "k", p.k);
    return out.str();
}

std::string params_to_kv(const RobustParams& p) {
    std::ostringstream out;
    out << "kind robust\n";
    put(out, "q", p.base.q);
    put(out, "M", p.base.M);
    put(out, "h", p.base.h);
    put(out, "delta", p.delta);
    put(out, "n", p.base.n);
    put(out, "d", p.base.d);
    put(out, "m", p.base.m);
    put(out, "mPrime", p.base.mPrime);
    put(out, "R", p.base.R);
    put(out, "idxWidth", p.base.idxWidth);
    put(out, "baseK", p.base.k);
    put(out, "Q", p.Q);
    put(out, "L", p.L);
    put(out, "K", p.K);
    put(out, "k", p.k);
    return out.str();
}

ParamsKind peek_params_kind(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key, kind, extra;
        ls >> key;
        if (key != "kind" || !(ls >> kind) || (ls >> extra))
            throw FormatError("parameter documents start with a kind line");
        return kind_of(kind);
    }
    throw FormatError("empty parameter document");
}

CodeParams2D params2d_from_kv(const std::string& text) {
    KvDoc doc = parse_kv(text);
    expect_kind(doc, "2d");
    const CodeParams2D p =
        derive_params_2d((int)doc.take("q"), doc.take("M"), doc.take("h"));
    doc.match("n", p.n);
    doc.match("d", p.d);
    doc.match("m", p.m);
    doc.match("mPrime", p.mPrime);
    doc.match("R", p.R);
    doc.match("idxWidth", p.idxWidth);
    doc.match("k", p.k);
    doc.finish();
    return p;
}

CodeParams3D params3d_from_kv(const std::string& text) {
    KvDoc doc = parse_kv(text);
    expect_kind(doc, "3d");
    const CodeParams3D p =
        derive_params_3d((int)doc.take("q"), doc.take("M"), doc.take("h"));
    doc.match("n", p.n);
    doc.match("nPrime", p.nPrime);
    doc.match("d", p.d);
    doc.match("c", p.c);
    doc.match("a", p.a);
    doc.match("b", p.b);
    doc.match("colorCount", p.colorCount);
    doc.match("R", p.R);
    doc.match("idxWidth", p.idxWidth);
    doc.match("k", p.k);
    doc.finish();
    return p;
}

RobustParams params_robust_from_kv(const std::string& text) {
    KvDoc doc = parse_kv(text);
    expect_kind(doc, "robust");
    const CodeParams2D base =
        derive_params_2d((int)doc.take("q"), doc.take("M"), doc.take("h"));
    const RobustParams p = validate_params_robust(base, doc.take("delta"));
    doc.match("n", base.n);
    doc.match("d", base.d);
    doc.match("m", base.m);
    doc.match("mPrime", base.mPrime);
    doc.match("R", base.R);
    doc.match("idxWidth", base.idxWidth);
    doc.match("baseK", base.k);
    doc.match("Q", p.Q);
    doc.match("L", p.L);
    doc.match("K", p.K);
    doc.match("k", p.k);
    doc.finish();
    return p;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) throw FormatError("cannot read " + path);
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    out << text;
    out.flush();
    if (!out) throw FormatError("cannot write " + path);
}

} // namespace fragcode
