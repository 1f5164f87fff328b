// Command-line front end: parameter derivation, the three codecs, channel
// actions, rate tables, bounds, verification suites, and PGM rendering.
// Exit codes: 0 success, 1 suite failure, 2 infeasible params, 3 decode
// failure, 4 format error, 5 no legal fragment.
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fragcode/acceptance.hpp"
#include "fragcode/channel.hpp"
#include "fragcode/codec2d.hpp"
#include "fragcode/codec3d.hpp"
#include "fragcode/errors.hpp"
#include "fragcode/grid.hpp"
#include "fragcode/message.hpp"
#include "fragcode/params_io.hpp"
#include "fragcode/rates.hpp"
#include "fragcode/robust.hpp"

using namespace fragcode;

namespace {

struct Opts {
    int q = 2;
    long long M = 0, h = 0, n = 0;
    long long delta = -1;
    bool threeD = false;
    bool csv = false;
    double exponent = 1.5;
    int table = 0;
    std::string suite = "all";
    std::string params, colors;
    std::string in, out, log;
    std::string message, messageFile;
    std::string mode = "guillotine";
    std::string strategy = "random";
    std::uint64_t seed = 0;
    int maxCuts = 0;
    int top = 0, left = 0, rows = 0, cols = 0;
    int unit = 0;
};

std::string trimmed(std::string s) {
    const auto notSpace = [](unsigned char ch) { return !std::isspace(ch); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notSpace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notSpace).base(), s.end());
    return s;
}

Message read_message(int q, const Opts& o) {
    if (o.message.empty() == o.messageFile.empty())
        throw ParamError("provide exactly one of --message and --message-file");
    const std::string text =
        o.message.empty() ? read_text_file(o.messageFile) : o.message;
    return msg_from_hex(q, trimmed(text));
}

// Unit side and legality bounds shared by the channel commands; robust
// documents contribute their base code, 3d documents do not apply here.
CodeParams2D base_params_2d(const std::string& path) {
    const std::string text = read_text_file(path);
    switch (peek_params_kind(text)) {
        case ParamsKind::TwoD:
            return params2d_from_kv(text);
        case ParamsKind::Robust:
            return params_robust_from_kv(text).base;
        case ParamsKind::ThreeD:
            throw ParamError("this command works on 2d grids; give 2d or robust parameters");
    }
    throw ParamError("unrecognized parameters document");
}

void write_pgm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& pix) {
    std::ofstream outFile(path, std::ios::binary);
    if (!outFile) throw FormatError("cannot write " + path);
    outFile << "P5\n" << width << ' ' << height << "\n255\n";
    outFile.write(reinterpret_cast<const char*>(pix.data()),
                  static_cast<std::streamsize>(pix.size()));
    if (!outFile) throw FormatError("short write to " + path);
}

int cmd_params(const Opts& o) {
    std::string doc;
    if (o.threeD) {
        if (o.delta >= 0)
            throw ParamError("delta applies to the 2d robust code only");
        doc = params_to_kv(derive_params_3d(o.q, o.M, o.h));
    } else if (o.delta >= 0) {
        doc = params_to_kv(
            validate_params_robust(derive_params_2d(o.q, o.M, o.h), o.delta));
    } else {
        doc = params_to_kv(derive_params_2d(o.q, o.M, o.h));
    }
    if (o.out.empty())
        std::fputs(doc.c_str(), stdout);
    else
        write_text_file(o.out, doc);
    return 0;
}

int cmd_encode2d(const Opts& o) {
    const CodeParams2D p = params2d_from_kv(read_text_file(o.params));
    write_grid2d(encode2d(p, read_message(p.q, o)), o.out);
    return 0;
}

int cmd_decode2d(const Opts& o) {
    const CodeParams2D p = params2d_from_kv(read_text_file(o.params));
    const Message msg = decode2d(p, read_grid2d(o.in));
    std::printf("%s\n", msg_to_hex(p.q, msg).c_str());
    return 0;
}

int cmd_encode3d(const Opts& o) {
    const CodeParams3D p = params3d_from_kv(read_text_file(o.params));
    write_grid3d(encode3d(p, read_message(p.q, o)), o.out);
    return 0;
}

int cmd_decode3d(const Opts& o) {
    const CodeParams3D p = params3d_from_kv(read_text_file(o.params));
    const Message msg = decode3d(p, read_grid3d(o.in));
    std::printf("%s\n", msg_to_hex(p.q, msg).c_str());
    return 0;
}

int cmd_encode_robust(const Opts& o) {
    const RobustParams p = params_robust_from_kv(read_text_file(o.params));
    write_grid2d(encode_robust(p, read_message(p.base.q, o)), o.out);
    return 0;
}

int cmd_decode_robust(const Opts& o) {
    const RobustParams p = params_robust_from_kv(read_text_file(o.params));
    const Message msg = decode_robust(p, read_grid2d(o.in));
    std::printf("%s\n", msg_to_hex(p.base.q, msg).c_str());
    return 0;
}

int cmd_fragment(const Opts& o) {
    FragmentationPlan plan;
    if (o.mode == "guillotine")
        plan.mode = FragMode::Guillotine;
    else if (o.mode == "fixed-crop")
        plan.mode = FragMode::FixedCrop;
    else if (o.mode == "worst-case")
        plan.mode = FragMode::WorstCase;
    else
        throw ParamError("mode must be guillotine, fixed-crop, or worst-case");
    plan.seed = o.seed;
    plan.maxCuts = o.maxCuts;
    plan.top = o.top;
    plan.left = o.left;
    plan.rows = o.rows;
    plan.cols = o.cols;
    if (!o.params.empty()) {
        const CodeParams2D p = base_params_2d(o.params);
        plan.M = p.M;
        plan.h = p.h;
    } else {
        plan.M = o.M;
        plan.h = o.h;
    }
    if (plan.mode != FragMode::FixedCrop && (plan.M < 1 || plan.h < 1))
        throw ParamError("give --params or both -M and -h to bound legality");

    const FragmentResult res = fragment(read_grid2d(o.in), plan);
    if (!o.log.empty()) {
        std::ostringstream text;
        text << "mode " << o.mode << "\nseed " << o.seed << "\npieces "
             << res.pieces.size() << "\n";
        for (const Rect& r : res.pieces)
            text << "piece " << r.top << ' ' << r.left << ' ' << r.rows << ' '
                 << r.cols << "\n";
        if (res.legalRect)
            text << "legal " << res.legalRect->top << ' ' << res.legalRect->left
                 << ' ' << res.legalRect->rows << ' ' << res.legalRect->cols
                 << "\n";
        else
            text << "legal none\n";
        write_text_file(o.log, text.str());
    }
    if (!res.fragment) {
        std::fprintf(stderr, "error: no legal fragment under this plan\n");
        return 5;
    }
    write_grid2d(*res.fragment, o.out);
    return 0;
}

int cmd_flip(const Opts& o) {
    FlipBudget budget;
    budget.delta = o.delta < 0 ? 0 : o.delta;
    if (o.strategy == "random")
        budget.strategy = FlipBudget::Strategy::Random;
    else if (o.strategy == "zero-unit")
        budget.strategy = FlipBudget::Strategy::ZeroUnit;
    else if (o.strategy == "borders")
        budget.strategy = FlipBudget::Strategy::Borders;
    else
        throw ParamError("strategy must be random, zero-unit, or borders");
    budget.seed = o.seed;
    budget.d = o.unit;
    if (budget.d == 0 && !o.params.empty())
        budget.d = static_cast<int>(base_params_2d(o.params).d);

    const auto [flipped, positions] = inject_flips(read_grid2d(o.in), budget);
    write_grid2d(flipped, o.out);
    if (!o.log.empty()) {
        std::ostringstream text;
        text << "flips " << positions.size() << "\n";
        for (auto [r, c] : positions) text << r << ' ' << c << "\n";
        write_text_file(o.log, text.str());
    }
    return 0;
}

int cmd_rates(const Opts& o) {
    std::fputs(emit_table(o.table, o.csv).c_str(), stdout);
    return 0;
}

int cmd_bounds(const Opts& o) {
    const long long delta = o.delta < 0 ? 0 : o.delta;
    const double sphere = sphere_packing_bound(o.q, o.M, delta);
    const double lll = lll_existence_bound(o.q, o.n, o.M, delta, o.exponent);
    if (o.csv) {
        std::printf("q,n,M,delta,exponent,spherePacking,existenceLLL\n");
        std::printf("%d,%lld,%lld,%lld,%g,%.9f,%.9f\n", o.q, o.n, o.M, delta,
                    o.exponent, sphere, lll);
    } else {
        std::printf("q %d\nn %lld\nM %lld\ndelta %lld\nexponent %g\n", o.q, o.n,
                    o.M, delta, o.exponent);
        std::printf("spherePacking %.9f\nexistenceLLL %.9f\n", sphere, lll);
    }
    return 0;
}

int cmd_verify(const Opts& o) {
    bool allPass = true;
    for (const auto& r : run_suite(o.suite)) {
        std::puts(format_result(r).c_str());
        allPass = allPass && r.pass;
    }
    return allPass ? 0 : 1;
}

int cmd_render(const Opts& o) {
    const BitGrid2D g = read_grid2d(o.in);
    int width = 0, height = 0;
    std::vector<std::uint8_t> pix;
    if (!o.colors.empty()) {
        const CodeParams2D p = base_params_2d(o.colors);
        const int d = static_cast<int>(p.d);
        width = g.cols() / d;
        height = g.rows() / d;
        if (width < 1 || height < 1)
            throw ParamError("grid is smaller than one unit of the given code");
        pix.reserve(static_cast<std::size_t>(width) * height);
        for (int u = 0; u < height; ++u)
            for (int v = 0; v < width; ++v)
                pix.push_back(static_cast<std::uint8_t>(
                    color(p, u, v) * 255 / (p.mPrime - 1)));
    } else {
        width = g.cols();
        height = g.rows();
        pix.reserve(static_cast<std::size_t>(width) * height);
        for (int r = 0; r < height; ++r)
            for (int c = 0; c < width; ++c)
                pix.push_back(
                    static_cast<std::uint8_t>(g.at(r, c) * 255 / (g.q() - 1)));
    }
    write_pgm(o.out, width, height, pix);
    return 0;
}

CLI::App* add_sub(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print this help and exit");
    return sub;
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    int exitCode = 0;

    CLI::App app{"forensic-coding toolkit: fragment-recoverable bit grids"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    CLI::App* params = add_sub(app, "params", "derive code parameters and emit a parameters document");
    params->add_option("-q", o.q, "alphabet size")->capture_default_str();
    params->add_option("-M", o.M, "minimum fragment area (2d) or volume (3d)")->required();
    params->add_option("-h", o.h, "minimum fragment side")->required();
    params->add_option("--delta", o.delta, "bit-flip budget; selects the robust 2d code");
    params->add_flag("--3d", o.threeD, "derive the 3d cuboid code");
    params->add_option("-o,--out", o.out, "write the document here instead of stdout");
    params->callback([&] { exitCode = cmd_params(o); });

    const auto addCodec = [&](const std::string& name, const std::string& desc,
                              bool encode, int (*fn)(const Opts&)) {
        CLI::App* sub = add_sub(app, name, desc);
        sub->add_option("--params", o.params, "parameters document")->required();
        if (encode) {
            sub->add_option("-m,--message", o.message, "message as <len>:<hexdigits>");
            sub->add_option("--message-file", o.messageFile, "file holding the hex message");
            sub->add_option("-o,--out", o.out, "output grid file")->required();
        } else {
            sub->add_option("-i,--in", o.in, "fragment grid file")->required();
        }
        sub->callback([&o, fn, &exitCode] { exitCode = fn(o); });
    };
    addCodec("encode2d", "encode a message into a square codeword", true, cmd_encode2d);
    addCodec("decode2d", "recover the message from a 2d fragment", false, cmd_decode2d);
    addCodec("encode3d", "encode a message into a cuboid codeword", true, cmd_encode3d);
    addCodec("decode3d", "recover the message from a 3d fragment", false, cmd_decode3d);
    addCodec("encode-robust", "encode with the bit-flip-tolerant 2d code", true, cmd_encode_robust);
    addCodec("decode-robust", "recover the message from a flipped 2d fragment", false, cmd_decode_robust);

    CLI::App* frag = add_sub(app, "fragment", "break a codeword and keep one legal fragment");
    frag->add_option("-i,--in", o.in, "codeword grid file")->required();
    frag->add_option("-o,--out", o.out, "fragment grid file")->required();
    frag->add_option("--mode", o.mode, "guillotine, fixed-crop, or worst-case")->capture_default_str();
    frag->add_option("--seed", o.seed, "RNG seed for guillotine cuts")->capture_default_str();
    frag->add_option("--max-cuts", o.maxCuts, "guillotine cut budget")->capture_default_str();
    frag->add_option("--params", o.params, "take M and h from this document");
    frag->add_option("-M", o.M, "minimum fragment area");
    frag->add_option("-h", o.h, "minimum fragment side");
    frag->add_option("--top", o.top, "fixed crop: top row");
    frag->add_option("--left", o.left, "fixed crop: left column");
    frag->add_option("--rows", o.rows, "fixed crop: height");
    frag->add_option("--cols", o.cols, "fixed crop: width");
    frag->add_option("--log", o.log, "write the piece list here");
    frag->callback([&] { exitCode = cmd_fragment(o); });

    CLI::App* flip = add_sub(app, "flip", "toggle up to delta cells under a named strategy");
    flip->add_option("-i,--in", o.in, "input grid file")->required();
    flip->add_option("-o,--out", o.out, "output grid file")->required();
    flip->add_option("--delta", o.delta, "maximum number of flips")->required();
    flip->add_option("--strategy", o.strategy, "random, zero-unit, or borders")->capture_default_str();
    flip->add_option("--seed", o.seed, "RNG seed for the random strategy")->capture_default_str();
    flip->add_option("-d,--unit", o.unit, "unit side for the targeted strategies");
    flip->add_option("--params", o.params, "take the unit side from this document");
    flip->add_option("--log", o.log, "write flipped positions here");
    flip->callback([&] { exitCode = cmd_flip(o); });

    CLI::App* rates = add_sub(app, "rates", "regenerate a published rate table");
    rates->add_option("table", o.table, "table number: 1, 2, or 3")->required();
    rates->add_flag("--csv", o.csv, "emit CSV instead of aligned text");
    rates->callback([&] { exitCode = cmd_rates(o); });

    CLI::App* bounds = add_sub(app, "bounds", "print packing and existence bounds on the rate");
    bounds->add_option("-q", o.q, "alphabet size")->capture_default_str();
    bounds->add_option("-n", o.n, "codeword side")->required();
    bounds->add_option("-M", o.M, "minimum fragment area")->required();
    bounds->add_option("--delta", o.delta, "bit-flip budget");
    bounds->add_option("--exponent", o.exponent, "fragment-count exponent in the existence bound")->capture_default_str();
    bounds->add_flag("--csv", o.csv, "emit CSV instead of key-value lines");
    bounds->callback([&] { exitCode = cmd_bounds(o); });

    CLI::App* verify = add_sub(app, "verify", "run an acceptance suite and print one line per criterion");
    verify->add_option("suite", o.suite, "discrepancy, lemmas, roundtrip, robust, or all")->capture_default_str();
    verify->callback([&] { exitCode = cmd_verify(o); });

    CLI::App* render = add_sub(app, "render", "emit a grayscale PGM of a grid or of a code's unit coloring");
    render->add_option("-i,--in", o.in, "grid file")->required();
    render->add_option("-o,--out", o.out, "output PGM file")->required();
    render->add_option("--colors", o.colors, "render the unit color map of this code instead");
    render->callback([&] { exitCode = cmd_render(o); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    } catch (const ParamError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const DecodeError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const FormatError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return exitCode;
}
