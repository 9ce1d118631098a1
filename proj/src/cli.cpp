#include "nearalign/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nearalign/approx.hpp"
#include "nearalign/exact.hpp"
#include "nearalign/hardgen.hpp"
#include "nearalign/oracle.hpp"

namespace nearalign::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kChunk = 1 << 16;

// Bytes are emitted as the code points U+0000..U+00FF.
std::string byte_text(Symbol c)
{
    const auto u = static_cast<unsigned char>(c);
    std::string out;
    if (u < 0x80) {
        out.push_back(static_cast<char>(u));
    }
    else {
        out.push_back(static_cast<char>(0xC0 | (u >> 6)));
        out.push_back(static_cast<char>(0x80 | (u & 0x3F)));
    }
    return out;
}

Json edit_json(const EditOp& op)
{
    Json j;
    switch (op.kind) {
        case EditKind::deletion:
            j["op"] = "del";
            j["s_pos"] = op.s_pos;
            j["s_char"] = byte_text(op.s_sym);
            break;
        case EditKind::insertion:
            j["op"] = "ins";
            j["t_pos"] = op.t_pos;
            j["t_char"] = byte_text(op.t_sym);
            break;
        case EditKind::substitution:
            j["op"] = "sub";
            j["s_pos"] = op.s_pos;
            j["t_pos"] = op.t_pos;
            j["s_char"] = byte_text(op.s_sym);
            j["t_char"] = byte_text(op.t_sym);
            break;
    }
    return j;
}

Json params_json(const ModeParams& p)
{
    Json j;
    j["d"] = p.d;
    if (p.epsilon)
        j["epsilon"] = *p.epsilon;
    if (p.error)
        j["error"] = *p.error;
    return j;
}

// Per-mode streaming state behind one step() interface.
class Driver
{
  public:
    explicit Driver(const RunRequest& req)
        : req_(req)
    {
        switch (req.mode) {
            case Mode::exact:
                exact_ = std::make_unique<ExactEngine>(req.d, ExactOptions{!req.recompute_always});
                break;
            case Mode::multiplicative:
                if (!req.epsilon)
                    throw InvalidParams("approx-mult needs --epsilon");
                mult_ = std::make_unique<MultiplicativeEngine>(req.d, *req.epsilon, req.threads);
                break;
            case Mode::additive:
                if (!req.error)
                    throw InvalidParams("approx-add needs --error");
                add_ = std::make_unique<AdditiveEngine>(req.d, *req.error, req.threads);
                break;
            case Mode::oracle:
                if (req.d < 0)
                    throw InvalidParams("budget d must be non-negative");
                break;
        }
    }

    void feed(const char* s, const char* t, std::size_t count)
    {
        if (req_.mode == Mode::oracle) {
            s_all_.append(s, count);
            t_all_.append(t, count);
            if (s_all_.size() > oracle::kMaxLength)
                throw InvalidParams("oracle mode is limited to " + std::to_string(oracle::kMaxLength) + " symbols");
            high_water_ = std::max(high_water_, s_all_.size());
            n_ += count;
            return;
        }
        for (std::size_t i = 0; i < count; ++i) {
            if (exact_)
                exact_->step(s[i], t[i]);
            else if (mult_)
                mult_->step(s[i], t[i]);
            else
                add_->step(s[i], t[i]);
            track();
        }
        n_ += count;
    }

    std::optional<NearAlignment> finish() const
    {
        if (exact_)
            return exact_->result();
        if (mult_)
            return mult_->result();
        if (add_)
            return add_->result();
        const auto best = oracle::oracle_lmax(s_all_, t_all_, req_.d);
        if (!best)
            return std::nullopt;
        const auto off = static_cast<std::size_t>(best->start - 1);
        const auto len = static_cast<std::size_t>(best->length);
        const auto full = oracle::full_edit_distance(std::string_view(s_all_).substr(off, len),
                                                     std::string_view(t_all_).substr(off, len));
        EditScript script;
        const auto shift = static_cast<std::int64_t>(off);
        for (const auto& op : full.script.ops)
            script.ops.push_back(op.shifted(shift, shift));
        return NearAlignment{best->start, best->end, canonicalize(std::move(script)), Mode::oracle, params()};
    }

    ModeParams params() const { return ModeParams{req_.d, req_.epsilon, req_.error}; }

    Json stats(double seconds) const
    {
        Json j;
        j["symbols"] = n_;
        j["ns_per_symbol"] = n_ == 0 ? 0.0 : seconds * 1e9 / static_cast<double>(n_);
        if (exact_) {
            const auto& st = exact_->stats();
            j["max_window"] = st.max_window;
            j["max_window_within_d"] = st.max_window_within_d;
            j["alignments"] = st.alignments;
            j["cuts"] = st.cuts;
            j["trims"] = st.trims;
            j["max_frontier_ops"] = st.max_frontier_ops;
        }
        const ApproxStats* ast = mult_ ? &mult_->stats() : add_ ? &add_->stats() : nullptr;
        if (ast != nullptr) {
            j["max_live_checkpoints"] = ast->max_live_checkpoints;
            j["max_live_sketches"] = ast->max_live_sketches;
            j["sketches"] = ast->sketches_created;
        }
        j["max_symbols_held"] = high_water_;
        return j;
    }

  private:
    void track()
    {
        std::size_t held = 0;
        if (exact_)
            held = exact_->stats().max_buffered;
        else if (mult_)
            held = mult_->live_sketches() * static_cast<std::size_t>(req_.d + 1);
        else
            held = add_->live_sketches() * static_cast<std::size_t>(req_.d + 1);
        high_water_ = std::max(high_water_, held);
    }

    RunRequest req_;
    std::unique_ptr<ExactEngine> exact_;
    std::unique_ptr<MultiplicativeEngine> mult_;
    std::unique_ptr<AdditiveEngine> add_;
    std::string s_all_;
    std::string t_all_;
    std::size_t n_ = 0;
    std::size_t high_water_ = 0;
};

int drive(const RunRequest& req, const std::function<std::size_t(std::vector<char>&, std::vector<char>&)>& next,
          std::ostream& out, std::ostream& err)
{
    try {
        Driver driver(req);
        std::vector<char> s;
        std::vector<char> t;
        const auto start = std::chrono::steady_clock::now();
        for (;;) {
            const std::size_t count = next(s, t);
            if (count == 0)
                break;
            driver.feed(s.data(), t.data(), count);
        }
        const auto result = driver.finish();
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out << serialize(result, req.mode, driver.params()) << '\n';
        if (req.stats)
            err << driver.stats(seconds).dump() << '\n';
        return kExitOk;
    }
    catch (const std::exception& e) {
        err << "near-align: " << e.what() << '\n';
        return kExitError;
    }
}

Mode parse_mode(const std::string& name)
{
    if (name == "exact")
        return Mode::exact;
    if (name == "approx-mult")
        return Mode::multiplicative;
    if (name == "approx-add")
        return Mode::additive;
    return Mode::oracle;
}

void write_file(const std::string& path, const std::string& data)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InvalidParams("cannot write " + path);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

} // namespace

std::string serialize(const std::optional<NearAlignment>& result, Mode mode, const ModeParams& params)
{
    Json j;
    j["mode"] = std::string(mode_name(mode));
    if (!result) {
        j["length"] = 0;
        return j.dump();
    }
    j["length"] = result->length();
    j["start"] = result->start;
    j["end"] = result->end;
    if (result->script) {
        j["edits"] = Json::array();
        for (const auto& op : result->script->ops)
            j["edits"].push_back(edit_json(op));
    }
    else {
        j["edits"] = nullptr;
    }
    j["params"] = params_json(params);
    return j.dump();
}

int run_streams(const RunRequest& req, std::istream& s, std::istream& t, std::ostream& out, std::ostream& err)
{
    return drive(
        req,
        [&](std::vector<char>& sb, std::vector<char>& tb) -> std::size_t {
            sb.resize(kChunk);
            tb.resize(kChunk);
            s.read(sb.data(), static_cast<std::streamsize>(kChunk));
            t.read(tb.data(), static_cast<std::streamsize>(kChunk));
            const auto ns = static_cast<std::size_t>(s.gcount());
            const auto nt = static_cast<std::size_t>(t.gcount());
            if (ns != nt)
                throw LengthMismatch("S and T differ in length");
            return ns;
        },
        out, err);
}

int run_paired(const RunRequest& req, std::istream& paired, std::ostream& out, std::ostream& err)
{
    std::vector<char> raw;
    return drive(
        req,
        [&](std::vector<char>& sb, std::vector<char>& tb) -> std::size_t {
            raw.resize(2 * kChunk);
            paired.read(raw.data(), static_cast<std::streamsize>(raw.size()));
            const auto got = static_cast<std::size_t>(paired.gcount());
            if (got % 2 != 0)
                throw LengthMismatch("paired input has an odd number of bytes");
            sb.resize(got / 2);
            tb.resize(got / 2);
            for (std::size_t i = 0; i < got / 2; ++i) {
                sb[i] = raw[2 * i];
                tb[i] = raw[2 * i + 1];
            }
            return got / 2;
        },
        out, err);
}

int gen(const GenRequest& req, std::ostream& out, std::ostream& err)
{
    try {
        const auto pair = hardgen::sample_ham_pair(req.n, req.d, req.seed);
        std::string s;
        std::string t;
        if (req.kind == "ham-pair") {
            s = pair.x;
            t = pair.y;
        }
        else if (req.kind == "s-pair") {
            s = hardgen::s_transform(pair.x, req.d);
            t = hardgen::s_transform(pair.y, req.d);
        }
        else if (req.kind == "t-pair") {
            s = hardgen::t_transform(hardgen::s_transform(pair.x, req.d), req.d, req.n);
            t = hardgen::t_transform(hardgen::s_transform(pair.y, req.d), req.d, req.n);
        }
        else {
            throw InvalidParams("unknown kind " + req.kind);
        }
        if (req.out.empty())
            throw InvalidParams("gen needs --out");
        write_file(req.out + ".s", s);
        write_file(req.out + ".t", t);

        Json j;
        j["kind"] = req.kind;
        j["n"] = req.n;
        j["d"] = req.d;
        j["seed"] = req.seed;
        j["lengths"] = {{"s", s.size()}, {"t", t.size()}};
        j["ham"] = oracle::hamming(pair.x, pair.y);
        j["files"] = {req.out + ".s", req.out + ".t"};
        out << j.dump() << '\n';
        return kExitOk;
    }
    catch (const std::exception& e) {
        err << "near-align: " << e.what() << '\n';
        return kExitError;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Longest same-index near-alignment of two streams", "near-align"};
    app.require_subcommand(1);

    RunRequest req;
    std::string s_path;
    std::string t_path;
    std::string paired_path;
    std::string exact_mode = "cached";
    double epsilon = 0.0;
    Position error = 0;

    std::vector<CLI::App*> run_cmds;
    for (const char* name : {"exact", "approx-mult", "approx-add", "oracle"}) {
        auto* cmd = app.add_subcommand(name, std::string("run ") + name + " mode");
        cmd->add_option("--d", req.d, "edit budget")->required()->check(CLI::NonNegativeNumber);
        auto* s_opt = cmd->add_option("--s", s_path, "S input file");
        auto* t_opt = cmd->add_option("--t", t_path, "T input file");
        auto* p_opt = cmd->add_option("--paired", paired_path, "interleaved S/T byte pairs");
        s_opt->needs(t_opt)->excludes(p_opt);
        t_opt->needs(s_opt)->excludes(p_opt);
        cmd->add_option("--threads", req.threads, "sketch update threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--stats", req.stats, "structural statistics on stderr");
        if (std::string(name) == "approx-mult")
            cmd->add_option("--epsilon", epsilon, "approximation factor")->required();
        if (std::string(name) == "approx-add")
            cmd->add_option("--error", error, "additive error E")->required();
        if (std::string(name) == "exact")
            cmd->add_option("--mode", exact_mode, "alignment caching")
                ->check(CLI::IsMember({"cached", "recompute-always"}));
        run_cmds.push_back(cmd);
    }

    GenRequest greq;
    std::optional<std::uint64_t> seed;
    auto* gen_cmd = app.add_subcommand("gen", "write a hard instance pair");
    gen_cmd->add_option("--kind", greq.kind, "instance family")
        ->required()
        ->check(CLI::IsMember({"ham-pair", "s-pair", "t-pair"}));
    gen_cmd->add_option("--n", greq.n, "bit length")->required();
    gen_cmd->add_option("--d", greq.d, "edit budget")->required()->check(CLI::NonNegativeNumber);
    gen_cmd->add_option("--seed", seed, "generator seed");
    gen_cmd->add_option("--out", greq.out, "output prefix")->required();

    try {
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i)
            args.emplace_back(argv[i]);
        app.parse(args);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    if (gen_cmd->parsed()) {
        if (seed) {
            greq.seed = *seed;
        }
        else if (const char* env = std::getenv("NEAR_ALIGN_SEED")) {
            try {
                greq.seed = std::stoull(env);
            }
            catch (const std::exception&) {
                err << "near-align: NEAR_ALIGN_SEED is not an unsigned integer\n";
                return kExitError;
            }
        }
        return gen(greq, out, err);
    }

    for (auto* cmd : run_cmds) {
        if (!cmd->parsed())
            continue;
        req.mode = parse_mode(cmd->get_name());
        if (req.mode == Mode::multiplicative)
            req.epsilon = epsilon;
        if (req.mode == Mode::additive)
            req.error = error;
        req.recompute_always = exact_mode == "recompute-always";
        if (!paired_path.empty()) {
            std::ifstream p(paired_path, std::ios::binary);
            if (!p) {
                err << "near-align: cannot open " << paired_path << '\n';
                return kExitError;
            }
            return run_paired(req, p, out, err);
        }
        if (s_path.empty() || t_path.empty()) {
            err << "near-align: give --s and --t, or --paired\n";
            return kExitError;
        }
        std::ifstream s(s_path, std::ios::binary);
        std::ifstream t(t_path, std::ios::binary);
        if (!s || !t) {
            err << "near-align: cannot open input files\n";
            return kExitError;
        }
        return run_streams(req, s, t, out, err);
    }
    return kExitError;
}

} // namespace nearalign::cli
