#include <benchmark/benchmark.h>

#include "chaocrypt/bench.hpp"
#include "chaocrypt/chaotic_maps.hpp"
#include "chaocrypt/cipher.hpp"
#include "chaocrypt/keying.hpp"
#include "chaocrypt/synthetic.hpp"

using namespace chaocrypt;

static void BM_TdErcsNext(benchmark::State& state) {
  TdErcs map({0.3});
  for (auto _ : state) benchmark::DoNotOptimize(map.next());
}
BENCHMARK(BM_TdErcsNext);

static void BM_NcaNext(benchmark::State& state) {
  Nca map(0.47, NcaParams{1.2, 5.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(map.next());
    if (map.x() < 1e-6) map = Nca(0.47, NcaParams{1.2, 5.0});
  }
}
BENCHMARK(BM_NcaNext);

static void BM_Keystream(benchmark::State& state) {
  const KeyMaterial key = key_from_user_secret("bench");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_keystream(key, n));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n));
}
BENCHMARK(BM_Keystream)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 18);

static void BM_EncryptImage(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const ImageBuffer img = make_test_image(side, side, 1);
  const CipherConfig cfg = CipherConfig::plaintext_hash();
  for (auto _ : state) benchmark::DoNotOptimize(encrypt_image(img, cfg));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * side * side));
}
BENCHMARK(BM_EncryptImage)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_DecryptImage(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const CipherEnvelope env =
      encrypt_image(make_test_image(side, side, 1), CipherConfig::plaintext_hash());
  for (auto _ : state) benchmark::DoNotOptimize(decrypt_image(env));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * side * side));
}
BENCHMARK(BM_DecryptImage)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_AesBaseline(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const Payload p = standard_payload("image", side);
  BenchOptions o;
  o.warmup = 0;
  for (auto _ : state) benchmark::DoNotOptimize(bench_aes_baseline(p, o));
  state.counters["per_frame_s"] = benchmark::Counter(
      static_cast<double>(state.iterations() * o.trials), benchmark::Counter::kIsRate |
                                                              benchmark::Counter::kInvert);
}
BENCHMARK(BM_AesBaseline)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_EncryptAudio(benchmark::State& state) {
  const auto frames = make_sine_audio(static_cast<std::size_t>(state.range(0)));
  const CipherConfig cfg = CipherConfig::plaintext_hash();
  for (auto _ : state) benchmark::DoNotOptimize(encrypt_audio(frames, cfg));
}
BENCHMARK(BM_EncryptAudio)->Arg(512)->Arg(38400)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
