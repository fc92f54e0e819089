// Command-line front end: Groebner bases of code ideals, encoding, decoding,
// minimum distance, and a seeded channel simulation.
//
// Exit codes: 0 success, 1 decode failure (or failed verification),
// 2 malformed input, 3 resource cap exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gbcode/decoder.hpp"
#include "gbcode/linear_code.hpp"
#include "gbcode/oracle.hpp"

namespace {

using namespace gbcode;

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return LinearCode::standardize(parse_matrix(in));
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex;
  if (name == "grlex") return MonomialOrder::grlex;
  throw ParseError("unknown monomial order: " + name);
}

GroebnerBasis basis_by_buchberger(const LinearCode& code, MonomialOrder order) {
  return reduce_basis(buchberger(ideal_generators(code), order));
}

int run_gb(const LinearCode& code, const std::string& order_name,
           const std::string& method) {
  const MonomialOrder order = parse_order(order_name);
  GroebnerBasis basis{std::vector<Polynomial>{}, order, false};
  if (method == "closed") {
    if (order != MonomialOrder::lex) {
      throw ParseError("the closed-form construction requires --order lex; "
                       "use --method buchberger with grlex");
    }
    basis = closed_form_basis(code);
  } else if (method == "buchberger") {
    basis = basis_by_buchberger(code, order);
  } else {
    throw ParseError("unknown method: " + method);
  }
  for (const Polynomial& g : basis.elements) {
    std::cout << g.to_string(order) << "\n";
  }
  return 0;
}

int run_verify(const LinearCode& code, const std::string& order_name) {
  const MonomialOrder order = parse_order(order_name);
  bool ok = true;
  if (order == MonomialOrder::lex) {
    const GroebnerBasis closed = closed_form_basis(code);
    const GroebnerBasis computed = basis_by_buchberger(code, order);
    const bool equal = closed.elements == computed.elements;
    const bool criterion = verify_groebner(closed) && verify_groebner(computed);
    std::cout << "elements=" << closed.elements.size() << "\n";
    std::cout << "closed_equals_buchberger=" << (equal ? "yes" : "no") << "\n";
    std::cout << "criterion=" << (criterion ? "pass" : "fail") << "\n";
    ok = equal && criterion;
  } else {
    const GroebnerBasis computed = basis_by_buchberger(code, order);
    const bool criterion = verify_groebner(computed);
    std::cout << "elements=" << computed.elements.size() << "\n";
    std::cout << "criterion=" << (criterion ? "pass" : "fail") << "\n";
    ok = criterion;
  }
  return ok ? 0 : 1;
}

int run_encode(const LinearCode& code, const std::string& message) {
  std::cout << code.encode(Word::parse(message)).to_string() << "\n";
  return 0;
}

int run_decode(const LinearCode& code, const std::string& word,
               std::optional<int> t_override, bool verbose) {
  const Word received = Word::parse(word);
  if (received.size() != code.length()) {
    throw ParseError("word length does not match the code length n=" +
                     std::to_string(code.length()));
  }
  const DecodeResult result = decode(received, code, t_override);
  std::cout << "codeword=" << result.codeword.to_string() << "\n";
  std::cout << "error=" << result.error.to_string() << "\n";
  std::cout << "message=" << result.message.to_string() << "\n";
  std::cout << "path=" << to_string(result.path) << "\n";
  if (verbose) {
    std::cout << "remainder=" << remainder_word(received, code).to_string()
              << "\n";
    if (result.search_v) {
      std::cout << "v=" << result.search_v->to_string() << "\n";
    }
  }
  return 0;
}

int run_distance(const LinearCode& code) {
  const LinearCode::Distance dist = code.min_distance();
  std::cout << "d=" << dist.d << " t=" << dist.t << "\n";
  return 0;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// One transmission round. The RNG is derived from (seed, trial) alone, so
// results do not depend on how trials are sharded across workers.
bool simulate_trial(const LinearCode& code, int errors, int t,
                    std::uint64_t seed, std::uint64_t trial) {
  std::mt19937_64 rng(splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1))));
  const std::size_t k = code.dimension();
  const std::size_t n = code.length();

  Word message(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rng() & 1) message = message.with_flipped(i);
  }
  const Word sent = code.encode(message);

  // Flip `errors` distinct positions via a partial shuffle.
  std::vector<std::size_t> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = i;
  Word received = sent;
  for (int e = 0; e < errors; ++e) {
    const std::size_t j = e + static_cast<std::size_t>(rng() % (n - e));
    std::swap(positions[e], positions[j]);
    received = received.with_flipped(positions[e]);
  }

  try {
    return decode(received, code, t).codeword == sent;
  } catch (const DecodeFailure&) {
    return false;
  }
}

int run_simulate(const LinearCode& code, int trials, int errors,
                 std::uint64_t seed, std::optional<int> t_override,
                 int workers) {
  if (trials < 0) throw ParseError("--trials must be nonnegative");
  if (errors < 0 || errors > static_cast<int>(code.length())) {
    throw ParseError("--errors must be between 0 and n");
  }
  if (workers < 1) throw ParseError("--workers must be at least 1");
  const int t = t_override ? *t_override : code.min_distance().t;

  std::vector<std::int64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  const int chunk = trials / workers;
  const int extra = trials % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    const int count = chunk + (w < extra ? 1 : 0);
    const int end = begin + count;
    pool.emplace_back([&, w, begin, end] {
      std::int64_t ok = 0;
      for (int trial = begin; trial < end; ++trial) {
        if (simulate_trial(code, errors, t, seed,
                           static_cast<std::uint64_t>(trial)))
          ++ok;
      }
      partial[w] = ok;
    });
    begin = end;
  }
  for (std::thread& th : pool) th.join();

  std::int64_t successes = 0;
  for (std::int64_t p : partial) successes += p;
  const double rate = trials == 0 ? 1.0 : static_cast<double>(successes) / trials;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", rate);
  std::cout << "trials=" << trials << " errors=" << errors
            << " successes=" << successes << " rate=" << buf << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Encoder/decoder for binary linear block codes driven by "
               "Groebner bases of their binomial code ideals"};
  app.require_subcommand(1);

  std::string matrix_path;
  std::string word;
  std::string message;
  std::string order_name = "lex";
  std::string method = "closed";
  std::optional<int> t_override;
  int trials = 1000;
  int errors = 1;
  std::uint64_t seed = 0;
  int workers = 1;
  bool verbose = false;

  app.add_flag("--verbose", verbose, "include extra detail in reports");

  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("--matrix", matrix_path, "generator matrix file")
        ->required();
  };

  CLI::App* gb = app.add_subcommand("gb", "print the reduced Groebner basis");
  add_matrix(gb);
  gb->add_option("--order", order_name, "monomial order: lex or grlex");
  gb->add_option("--method", method, "construction: closed or buchberger");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the closed form against Buchberger");
  add_matrix(verify);
  verify->add_option("--order", order_name, "monomial order: lex or grlex");

  CLI::App* encode = app.add_subcommand("encode", "encode a message word");
  add_matrix(encode);
  encode->add_option("--message", message, "length-k message bits")->required();

  CLI::App* decode_cmd = app.add_subcommand("decode", "decode a received word");
  add_matrix(decode_cmd);
  decode_cmd->add_option("--word", word, "length-n received bits")->required();
  decode_cmd->add_option("--t", t_override, "error-correcting radius override");

  CLI::App* distance = app.add_subcommand(
      "distance", "print the minimum distance and radius");
  add_matrix(distance);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "run seeded random transmission rounds");
  add_matrix(simulate);
  simulate->add_option("--trials", trials, "number of rounds");
  simulate->add_option("--errors", errors, "bit flips per round");
  simulate->add_option("--seed", seed, "master seed");
  simulate->add_option("--t", t_override, "error-correcting radius override");
  simulate->add_option("--workers", workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    const LinearCode code = load_code(matrix_path);
    if (gb->parsed()) return run_gb(code, order_name, method);
    if (verify->parsed()) return run_verify(code, order_name);
    if (encode->parsed()) return run_encode(code, message);
    if (decode_cmd->parsed())
      return run_decode(code, word, t_override, verbose);
    if (distance->parsed()) return run_distance(code);
    if (simulate->parsed())
      return run_simulate(code, trials, errors, seed, t_override, workers);
    std::cerr << "no subcommand selected\n";
    return 2;
  } catch (const DecodeFailure& e) {
    std::cout << "decode_failure: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
