#include "acopt/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace acopt {

namespace {

int detect_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ACOPT_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1 && cap < 1024) n = std::min<long>(n, cap);
  }
  return n;
}

// Minimal persistent pool: workers grab chunk indices from an atomic
// counter, the caller joins in and waits on a completion count.
class Pool {
 public:
  Pool() : threads_(detect_thread_count()) {
    for (int t = 1; t < threads_; ++t) {
      workers_.emplace_back([this] { worker_loop(); });
    }
  }

  ~Pool() {
    {
      std::lock_guard<std::mutex> lk(mu_);
      shutdown_ = true;
    }
    cv_start_.notify_all();
    for (auto& w : workers_) w.join();
  }

  int threads() const { return threads_; }

  void run(int n_chunks, const std::function<void(int)>& body) {
    if (threads_ == 1 || n_chunks == 1) {
      for (int c = 0; c < n_chunks; ++c) body(c);
      return;
    }
    {
      std::lock_guard<std::mutex> lk(mu_);
      body_ = &body;
      n_chunks_ = n_chunks;
      next_.store(0, std::memory_order_relaxed);
      done_.store(0, std::memory_order_relaxed);
      ++generation_;
    }
    cv_start_.notify_all();
    drain();
    {
      std::unique_lock<std::mutex> lk(mu_);
      cv_done_.wait(lk, [this] { return done_.load() == n_chunks_; });
      body_ = nullptr;
    }
  }

 private:
  void drain() {
    int c;
    while ((c = next_.fetch_add(1, std::memory_order_relaxed)) < n_chunks_) {
      (*body_)(c);
      if (done_.fetch_add(1) + 1 == n_chunks_) cv_done_.notify_all();
    }
  }

  void worker_loop() {
    long seen = 0;
    for (;;) {
      {
        std::unique_lock<std::mutex> lk(mu_);
        cv_start_.wait(lk, [&] { return shutdown_ || generation_ != seen; });
        if (shutdown_) return;
        seen = generation_;
      }
      drain();
    }
  }

  int threads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_start_, cv_done_;
  const std::function<void(int)>* body_ = nullptr;
  int n_chunks_ = 0;
  std::atomic<int> next_{0}, done_{0};
  long generation_ = 0;
  bool shutdown_ = false;
};

Pool& pool() {
  static Pool p;
  return p;
}

}  // namespace

int thread_count() { return pool().threads(); }

void parallel_chunks(int n, const std::function<void(int, int)>& fn) {
  if (n <= 0) return;
  const int n_chunks = (n + kChunk - 1) / kChunk;
  if (n < kParallelThreshold || n_chunks == 1) {
    fn(0, n);
    return;
  }
  pool().run(n_chunks, [&](int c) {
    int b = c * kChunk;
    fn(b, std::min(n, b + kChunk));
  });
}

double parallel_sum(int n, const std::function<double(int, int)>& fn) {
  if (n <= 0) return 0.0;
  const int n_chunks = (n + kChunk - 1) / kChunk;
  if (n < kParallelThreshold || n_chunks == 1) return fn(0, n);
  std::vector<double> partial(n_chunks, 0.0);
  pool().run(n_chunks, [&](int c) {
    int b = c * kChunk;
    partial[c] = fn(b, std::min(n, b + kChunk));
  });
  double s = 0.0;
  for (double v : partial) s += v;  // fixed order
  return s;
}

}  // namespace acopt
