#include <doctest.h>
#include <httplib.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "support/zip_writer.hpp"
#include "wlaudit/errors.hpp"
#include "wlaudit/fetch.hpp"
#include "wlaudit/zip.hpp"

namespace fs = std::filesystem;
using namespace wlaudit;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path fresh_dir(const std::string& tag) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("wlaudit_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string tiny_archive(const std::string& name) {
  return fixtures::make_zip({
      {name + "/" + name + "_A.txt", "1, 2\n2, 1\n2, 3\n3, 2\n"},
      {name + "/" + name + "_graph_indicator.txt", "1\n1\n1\n", false},
      {name + "/" + name + "_graph_labels.txt", "1\n"},
      {name + "/README.txt", std::string(5000, 'x')},
  });
}

// Serves /data/<NAME>.zip from a map on a background thread.
class FixtureServer {
 public:
  explicit FixtureServer(std::map<std::string, std::string> archives) : archives_(std::move(archives)) {
    server_.Get(R"(/data/(.+)\.zip)", [this](const httplib::Request& req, httplib::Response& res) {
      ++requests_;
      const auto it = archives_.find(req.matches[1]);
      if (it == archives_.end()) {
        res.status = 404;
        return;
      }
      res.set_content(it->second, "application/zip");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FixtureServer() {
    server_.stop();
    thread_.join();
  }
  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/data"; }
  int requests() const { return requests_; }

 private:
  std::map<std::string, std::string> archives_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> requests_{0};
};

}  // namespace

TEST_CASE("zip reader handles stored and deflated entries") {
  const std::string payload(10000, 'a');
  const auto zip = fixtures::make_zip({{"x/a.txt", payload}, {"b.txt", "hello\n", false}});
  const auto entries = read_zip(zip);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "x/a.txt");
  CHECK(entries[0].data == payload);
  CHECK(entries[1].data == "hello\n");
  CHECK(zip.size() < payload.size());
}

TEST_CASE("zip reader rejects corrupt archives") {
  CHECK_THROWS_AS(read_zip("not a zip"), ExtractError);
  auto zip = fixtures::make_zip({{"a.txt", "hello world", false}});
  const auto at = zip.find("hello");
  zip[at] = 'j';
  CHECK_THROWS_AS(read_zip(zip), ExtractError);  // CRC mismatch
}

TEST_CASE("extraction refuses path traversal") {
  const fs::path dest = fresh_dir("zip");
  CHECK_THROWS_AS(extract_zip(fixtures::make_zip({{"../evil.txt", "x"}}), dest), ExtractError);
  CHECK_THROWS_AS(extract_zip(fixtures::make_zip({{"/abs.txt", "x"}}), dest), ExtractError);
  const auto written = extract_zip(fixtures::make_zip({{"d/ok.txt", "fine"}}), dest);
  REQUIRE(written.size() == 1);
  CHECK(read_file(dest / "d" / "ok.txt") == "fine");
  fs::remove_all(dest);
}

TEST_CASE("archive names resolve short aliases") {
  CHECK(tu_archive_name("IMDB-B") == "IMDB-BINARY");
  CHECK(tu_archive_name("IMDB-M") == "IMDB-MULTI");
  CHECK(tu_archive_name("REDDIT-B") == "REDDIT-BINARY");
  CHECK(tu_archive_name("MUTAG") == "MUTAG");
}

TEST_CASE("sha256 of a known string") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cold fetch downloads, extracts, then hits the cache") {
  const fs::path cache = fresh_dir("cache");
  FetchConfig cfg;
  cfg.cache_dir = cache;
  {
    FixtureServer server({{"TINY", tiny_archive("TINY")}});
    cfg.base_url = server.base_url();
    const fs::path dir = fetch_dataset(cfg, "TINY");
    CHECK(fs::exists(dir / "TINY_A.txt"));
    CHECK(server.requests() == 1);
    fetch_dataset(cfg, "TINY");
    CHECK(server.requests() == 1);
  }
  // Server gone: a warm cache needs no network.
  const fs::path dir = fetch_dataset(cfg, "TINY");
  CHECK(read_file(dir / "TINY_graph_labels.txt") == "1\n");

  const Dataset d = load_dataset("TINY", cfg);
  CHECK(d.size() == 1);
  CHECK(d.graphs[0].edge_count() == 2);
  fs::remove_all(cache);
}

TEST_CASE("aliases download the long archive name") {
  const fs::path cache = fresh_dir("cache");
  FixtureServer server({{"IMDB-BINARY", tiny_archive("IMDB-BINARY")}});
  FetchConfig cfg{server.base_url(), cache};
  const Dataset d = load_dataset("IMDB-B", cfg);
  CHECK(d.name == "IMDB-B");
  CHECK(fs::exists(cache / "IMDB-BINARY"));
  fs::remove_all(cache);
}

TEST_CASE("missing dataset and unreachable server are fetch errors") {
  const fs::path cache = fresh_dir("cache");
  {
    FixtureServer server({});
    FetchConfig cfg{server.base_url(), cache};
    try {
      fetch_dataset(cfg, "NOPE");
      FAIL("expected FetchError");
    } catch (const FetchError& e) {
      CHECK(e.kind() == ErrorKind::kFetch);
      CHECK(std::string(e.what()).find("404") != std::string::npos);
    }
  }
  FetchConfig cfg{"http://127.0.0.1:1", cache, std::chrono::seconds(2)};
  CHECK_THROWS_AS(fetch_dataset(cfg, "NOPE"), FetchError);
  CHECK_FALSE(fs::exists(cache / "NOPE"));
  fs::remove_all(cache);
}

TEST_CASE("checksum is verified before extraction") {
  const fs::path cache = fresh_dir("cache");
  const std::string zip = tiny_archive("TINY");
  FixtureServer server({{"TINY", zip}});
  FetchConfig cfg{server.base_url(), cache};
  cfg.checksum = std::string(64, '0');
  CHECK_THROWS_AS(fetch_dataset(cfg, "TINY"), ChecksumMismatchError);
  CHECK_FALSE(fs::exists(cache / "TINY"));
  cfg.checksum = sha256_hex(zip);
  CHECK(fs::exists(fetch_dataset(cfg, "TINY") / "TINY_A.txt"));
  fs::remove_all(cache);
}

TEST_CASE("concurrent fetches of one dataset download once") {
  const fs::path cache = fresh_dir("cache");
  FixtureServer server({{"TINY", tiny_archive("TINY")}});
  FetchConfig cfg{server.base_url(), cache};
  std::vector<std::thread> workers;
  std::atomic<int> ok{0};
  for (int i = 0; i < 4; ++i) {
    workers.emplace_back([&] {
      if (fs::exists(fetch_dataset(cfg, "TINY") / "TINY_A.txt")) ++ok;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok == 4);
  CHECK(server.requests() == 1);
  fs::remove_all(cache);
}

TEST_CASE("local roots take precedence over the cache") {
  FetchConfig cfg{"http://127.0.0.1:1", fresh_dir("cache"), std::chrono::seconds(1)};
  const std::vector<fs::path> roots = {WLAUDIT_TEST_DATA};
  const Dataset d = load_dataset("MUTAG", cfg, roots);
  CHECK(d.size() == 188);
  fs::remove_all(cfg.cache_dir);
}
