// End-to-end tests running the installed CLI binary on real files.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "dtev/io.hpp"
#include "test_util.hpp"

using namespace dtev;
using dtev::testutil::check_close;

namespace {

namespace fs = std::filesystem;

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() /
              ("dtev_cli_test_" + std::to_string(static_cast<long>(::getpid())));
        fs::create_directories(dir);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::string& args) {
    const std::string cmd = std::string(DTEV_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const char* kWorkedTransmission =
    "{\"kind\": \"transmission\", \"l\": 1, \"alpha\": [[2, 0]], \"beta\": [[0, 0]], "
    "\"alpha_dot\": [[1, 0]], \"beta_dot\": [[0, 0]]}";

}  // namespace

TEST_CASE("forward: worked transmission spectrum and standard weyl data") {
    Workspace ws;
    write_file(ws.path("t.json"), kWorkedTransmission);
    CHECK(run_cli("forward --in " + ws.path("t.json") + " --what spectrum --out " +
                  ws.path("sp.json")) == 0);
    const SpectrumFile sp = load_spectrum(read_file(ws.path("sp.json")));
    REQUIRE(sp.eigenvalues.size() == 1);
    check_close(sp.eigenvalues[0], Complex(0.0), 1e-12);

    write_file(ws.path("s.json"),
               "{\"kind\": \"standard\", \"l\": 2, \"a\": [[1, 0], [1, 0]], "
               "\"b\": [[0, 0], [0, 0]]}");
    CHECK(run_cli("forward --in " + ws.path("s.json") + " --what weyl --out " +
                  ws.path("w.json")) == 0);
    const WeylFile w = load_weyl(read_file(ws.path("w.json")));
    REQUIRE(w.M.size() == 4);
    check_close(w.M[0], Complex(1.0), 0.0);
    check_close(w.M[1], Complex(0.0), 0.0);
    check_close(w.M[2], Complex(1.0), 0.0);
    check_close(w.M[3], Complex(0.0), 0.0);

    // Deterministic: repeated runs produce identical bytes.
    CHECK(run_cli("forward --in " + ws.path("s.json") + " --what weyl --out " +
                  ws.path("w2.json")) == 0);
    CHECK(read_file(ws.path("w.json")) == read_file(ws.path("w2.json")));
}

TEST_CASE("forward: invariant violations exit 2") {
    Workspace ws;
    write_file(ws.path("bad.json"),
               "{\"kind\": \"transmission\", \"l\": 1, \"alpha\": [[0, 0]], \"beta\": [[0, 0]], "
               "\"alpha_dot\": [[1, 0]], \"beta_dot\": [[0, 0]]}");
    CHECK(run_cli("forward --in " + ws.path("bad.json") + " --what spectrum") == 2);
    CHECK(run_cli("forward --in " + ws.path("missing.json") + " --what spectrum") == 2);
    CHECK(run_cli("forward --in " + ws.path("bad.json") + " --what nonsense") == 2);
}

TEST_CASE("inverse: transmission mode on the worked files") {
    Workspace ws;
    write_file(ws.path("known.json"),
               "{\"kind\": \"transmission-data\", \"l\": 1, \"alpha_dot\": [[1, 0]], "
               "\"beta_dot\": [[0, 0]], \"alpha_l\": [2, 0]}");
    write_file(ws.path("sp.json"), "{\"kind\": \"spectrum\", \"eigenvalues\": [[0, 0]]}");
    CHECK(run_cli("inverse --mode transmission --known " + ws.path("known.json") +
                  " --spectrum " + ws.path("sp.json") + " --out " + ws.path("rec.json")) == 0);
    const Instance rec = load_instance(read_file(ws.path("rec.json")));
    const auto* T = std::get_if<TransmissionInstance>(&rec);
    REQUIRE(T != nullptr);
    check_close(T->alpha[0], Complex(2.0), 1e-12);
    check_close(T->beta[0], Complex(0.0), 1e-12);

    // A full instance file works as the known data too.
    write_file(ws.path("full.json"), kWorkedTransmission);
    CHECK(run_cli("inverse --mode transmission --known " + ws.path("full.json") + " --spectrum " +
                  ws.path("sp.json") + " --out " + ws.path("rec2.json")) == 0);
    CHECK(read_file(ws.path("rec.json")) == read_file(ws.path("rec2.json")));
}

TEST_CASE("inverse: hochstadt mode on the 3x3 example") {
    Workspace ws;
    write_file(ws.path("head.json"),
               "{\"kind\": \"symmetric-head\", \"l\": 3, \"A\": [[1, 0]], \"B\": [[0, 0]]}");
    const std::string r2 = format_double(std::sqrt(2.0));
    write_file(ws.path("mu.json"), "{\"kind\": \"spectrum\", \"eigenvalues\": [[0, 0], [" + r2 +
                                       ", 0], [-" + r2 + ", 0]]}");
    CHECK(run_cli("inverse --mode hochstadt --known " + ws.path("head.json") + " --spectrum " +
                  ws.path("mu.json") + " --out " + ws.path("J.json")) == 0);
    const Instance rec = load_instance(read_file(ws.path("J.json")));
    const auto* J = std::get_if<SymmetricJacobi>(&rec);
    REQUIRE(J != nullptr);
    check_close(J->A[0], Complex(1.0), 1e-9);
    check_close(J->A[1], Complex(1.0), 1e-9);
    for (const auto& bn : J->B) check_close(bn, Complex(0.0), 1e-9);
}

TEST_CASE("inverse: weyl mode and solvability failures") {
    Workspace ws;
    write_file(ws.path("w.json"),
               "{\"kind\": \"weyl\", \"l\": 1, \"M\": [[1, 0], [3, 0]]}");
    CHECK(run_cli("inverse --mode weyl --weyl " + ws.path("w.json") + " --out " +
                  ws.path("s.json")) == 0);
    const Instance rec = load_instance(read_file(ws.path("s.json")));
    const auto* S = std::get_if<StandardCoeffs>(&rec);
    REQUIRE(S != nullptr);
    check_close(S->b[0], Complex(3.0), 1e-13);

    write_file(ws.path("dead.json"),
               "{\"kind\": \"weyl\", \"l\": 2, \"M\": [[1, 0], [0, 0], [0, 0], [0, 0]]}");
    CHECK(run_cli("inverse --mode weyl --weyl " + ws.path("dead.json")) == 3);

    CHECK(run_cli("inverse --mode weyl") == 2);  // missing --weyl
}

TEST_CASE("inverse: two-spectra and polybc modes") {
    Workspace ws;
    write_file(ws.path("two.json"),
               "{\"kind\": \"spectrum\", \"mu\": [[1, 0], [-1, 0]], \"nu\": [[0, 0]]}");
    CHECK(run_cli("inverse --mode two-spectra --spectrum " + ws.path("two.json") + " --out " +
                  ws.path("s.json")) == 0);
    const Instance srec = load_instance(read_file(ws.path("s.json")));
    const auto* S = std::get_if<StandardCoeffs>(&srec);
    REQUIRE(S != nullptr);
    check_close(S->b[0], Complex(0.0), 1e-10);
    check_close(S->b[1], Complex(0.0), 1e-10);

    write_file(ws.path("bd.json"),
               "{\"kind\": \"boundary\", \"config\": \"full\", \"R0\": [[0, 0], [2, 0]], "
               "\"R1\": [[1, 0]]}");
    write_file(ws.path("ev.json"), "{\"kind\": \"spectrum\", \"eigenvalues\": [[-1, 0]]}");
    CHECK(run_cli("inverse --mode polybc --boundary " + ws.path("bd.json") + " --spectrum " +
                  ws.path("ev.json") + " --out " + ws.path("p.json")) == 0);
    const Instance prec = load_instance(read_file(ws.path("p.json")));
    const auto* PS = std::get_if<StandardCoeffs>(&prec);
    REQUIRE(PS != nullptr);
    check_close(PS->b[0], Complex(1.0), 1e-12);
}

TEST_CASE("roundtrip command") {
    CHECK(run_cli("roundtrip --mode transmission --l 5 --trials 50 --seed 1") == 0);
    CHECK(run_cli("roundtrip --mode weyl --l 1 --trials 1 --seed 1") == 0);
    CHECK(run_cli("roundtrip --mode weyl --l 13 --trials 1 --seed 1") == 2);  // size cap
    // An unreachable tolerance must fail with the tolerance exit code.
    CHECK(run_cli("roundtrip --mode weyl --l 5 --trials 5 --seed 1 --tol 1e-30") == 4);
}

TEST_CASE("stability command") {
    Workspace ws;
    write_file(ws.path("s.json"),
               "{\"kind\": \"standard\", \"l\": 2, \"a\": [[1, 0], [1, 0]], "
               "\"b\": [[0.5, 0], [-0.25, 0]]}");
    CHECK(run_cli("stability --in " + ws.path("s.json") +
                  " --mode weyl --deltas 0 --trials 3 --seed 1 --out " + ws.path("rep.json")) ==
          0);
    const std::string rep = read_file(ws.path("rep.json"));
    CHECK(rep.find("\"max_error\": 0") != std::string::npos);  // delta = 0 -> error 0

    CHECK(run_cli("stability --in " + ws.path("s.json") +
                  " --mode weyl --deltas 1e-2,1e-3 --trials 2 --seed 1") == 0);
    // polybc without --boundary is an input error.
    CHECK(run_cli("stability --in " + ws.path("s.json") +
                  " --mode polybc --deltas 1e-3 --trials 2 --seed 1") == 2);
}
