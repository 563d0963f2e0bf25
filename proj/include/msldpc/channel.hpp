#ifndef MSLDPC_CHANNEL_HPP
#define MSLDPC_CHANNEL_HPP

// Monte-Carlo decoding harness: BPSK over AWGN, iterative belief
// propagation on a sparse parity-check matrix (flooding schedule,
// sum-product or min-sum), FER/BER counting with a stopping rule.
//
// Determinism contract: every frame gets its own RNG stream derived as
// seed XOR frame-index, and the Gaussian sampler is a self-contained
// Box-Muller on top of mt19937_64, so a fixed seed reproduces bit-identical
// results run to run, and the same noise realizations pair across Eb/N0
// points.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclic_code.hpp"
#include "errors.hpp"

namespace msldpc {

struct ChannelConfig {
    double ebn0_db = 0.0;
    double rate = 0.5;   // k/n of the simulated code
    uint64_t seed = 1;
};

inline double noise_sigma2(const ChannelConfig& ch) {
    return 1.0 / (2.0 * ch.rate * std::pow(10.0, ch.ebn0_db / 10.0));
}

struct DecoderConfig {
    enum class Algo { sum_product, min_sum };
    uint32_t max_iterations = 50;
    Algo algorithm = Algo::sum_product;
    bool early_stop = true;
};

struct SimResult {
    double ebn0_db = 0.0;
    uint64_t frames = 0;
    uint64_t frame_errors = 0;
    uint64_t bit_errors = 0;
    double fer = 0.0;
    double ber = 0.0;
    double avg_iterations = 0.0;
    double wall_time = 0.0;  // seconds, informational only
};

// Deterministic standard-normal sampler (Box-Muller over mt19937_64).
class GaussianRng {
   public:
    explicit GaussianRng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        double u1 = (static_cast<double>(eng_() >> 11) + 1.0) * 0x1p-53;
        double u2 = static_cast<double>(eng_() >> 11) * 0x1p-53;
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

   private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Maps bit b to 1-2b, adds N(0, sigma^2) noise, returns LLRs 2y/sigma^2.
inline std::vector<double> bpsk_awgn_llr(const std::vector<uint8_t>& codeword, const ChannelConfig& ch,
                                         GaussianRng& rng) {
    const double sigma2 = noise_sigma2(ch);
    const double sigma = std::sqrt(sigma2);
    std::vector<double> llr(codeword.size());
    for (size_t i = 0; i < codeword.size(); ++i) {
        double y = (codeword[i] ? -1.0 : 1.0) + sigma * rng.next_gaussian();
        llr[i] = 2.0 * y / sigma2;
    }
    return llr;
}

struct BpResult {
    std::vector<uint8_t> estimate;
    bool converged = false;
    uint32_t iterations = 0;
};

// Flooding-schedule belief propagation on a fixed check matrix. Builds the
// edge structure once; decode() may be called for many frames.
class BpDecoder {
   public:
    explicit BpDecoder(const CheckMatrix& h) : h_(h) {
        edge_offset_.reserve(h_.rows.size() + 1);
        edge_offset_.push_back(0);
        for (const auto& row : h_.rows) {
            for (uint32_t v : row) edge_var_.push_back(v);
            edge_offset_.push_back(static_cast<uint32_t>(edge_var_.size()));
        }
        r_msg_.assign(edge_var_.size(), 0.0);
        total_.assign(h_.n_cols, 0.0);
        scratch_.assign(max_row_weight() + 1, 0.0);
    }

    const CheckMatrix& checks() const { return h_; }

    uint32_t max_row_weight() const {
        size_t w = 0;
        for (const auto& row : h_.rows) w = std::max(w, row.size());
        return static_cast<uint32_t>(w);
    }

    BpResult decode(const std::vector<double>& llr, const DecoderConfig& cfg) {
        if (llr.size() != h_.n_cols) throw LengthMismatch("LLR length does not match the check matrix");
        const size_t n_checks = h_.rows.size();
        std::fill(r_msg_.begin(), r_msg_.end(), 0.0);

        BpResult res;
        res.estimate.assign(h_.n_cols, 0);
        hard_decision(llr, res.estimate);
        if (cfg.early_stop && syndrome_ok(res.estimate)) {
            res.converged = true;
            res.iterations = 0;
            return res;
        }

        for (uint32_t it = 1; it <= cfg.max_iterations; ++it) {
            // variable totals = channel LLR plus all incoming check messages
            for (uint32_t v = 0; v < h_.n_cols; ++v) total_[v] = llr[v];
            for (size_t e = 0; e < edge_var_.size(); ++e) total_[edge_var_[e]] += r_msg_[e];

            for (size_t c = 0; c < n_checks; ++c) {
                uint32_t b = edge_offset_[c], eend = edge_offset_[c + 1];
                if (cfg.algorithm == DecoderConfig::Algo::sum_product)
                    update_check_spa(b, eend);
                else
                    update_check_minsum(b, eend);
            }

            for (uint32_t v = 0; v < h_.n_cols; ++v) total_[v] = llr[v];
            for (size_t e = 0; e < edge_var_.size(); ++e) total_[edge_var_[e]] += r_msg_[e];
            for (uint32_t v = 0; v < h_.n_cols; ++v) res.estimate[v] = total_[v] < 0.0 ? 1 : 0;

            res.iterations = it;
            if (syndrome_ok(res.estimate)) {
                res.converged = true;
                if (cfg.early_stop) return res;
            }
        }
        res.converged = syndrome_ok(res.estimate);
        return res;
    }

   private:
    void hard_decision(const std::vector<double>& llr, std::vector<uint8_t>& bits) const {
        for (uint32_t v = 0; v < h_.n_cols; ++v) bits[v] = llr[v] < 0.0 ? 1 : 0;
    }

    bool syndrome_ok(const std::vector<uint8_t>& bits) const {
        for (size_t c = 0; c < h_.rows.size(); ++c) {
            uint8_t s = 0;
            for (uint32_t e = edge_offset_[c]; e < edge_offset_[c + 1]; ++e) s ^= bits[edge_var_[e]];
            if (s) return false;
        }
        return true;
    }

    // Sum-product via forward/backward partial products of tanh(Q/2); no
    // divisions, so a hard-saturated edge cannot poison its neighbours.
    void update_check_spa(uint32_t b, uint32_t e) {
        const uint32_t w = e - b;
        double* t = scratch_.data();
        for (uint32_t i = 0; i < w; ++i) {
            double q = total_[edge_var_[b + i]] - r_msg_[b + i];
            t[i] = std::tanh(0.5 * q);
        }
        back_.resize(w);
        back_[w - 1] = 1.0;
        for (uint32_t i = w - 1; i > 0; --i) back_[i - 1] = back_[i] * t[i];
        double fwd = 1.0;
        for (uint32_t i = 0; i < w; ++i) {
            double prod = fwd * back_[i];
            prod = std::min(0.9999999999999, std::max(-0.9999999999999, prod));
            r_msg_[b + i] = std::log((1.0 + prod) / (1.0 - prod));  // = 2 atanh(prod)
            fwd *= t[i];
        }
    }

    // Plain min-sum: sign product and two smallest magnitudes.
    void update_check_minsum(uint32_t b, uint32_t e) {
        const uint32_t w = e - b;
        double min1 = 1e300, min2 = 1e300;
        uint32_t arg1 = 0;
        int sign_prod = 1;
        for (uint32_t i = 0; i < w; ++i) {
            double q = total_[edge_var_[b + i]] - r_msg_[b + i];
            scratch_[i] = q;
            double a = std::fabs(q);
            if (q < 0.0) sign_prod = -sign_prod;
            if (a < min1) {
                min2 = min1;
                min1 = a;
                arg1 = i;
            } else if (a < min2) {
                min2 = a;
            }
        }
        for (uint32_t i = 0; i < w; ++i) {
            double mag = (i == arg1) ? min2 : min1;
            int s = sign_prod * (scratch_[i] < 0.0 ? -1 : 1);
            r_msg_[b + i] = s * mag;
        }
    }

    CheckMatrix h_;
    std::vector<uint32_t> edge_var_;     // flat edge -> variable index
    std::vector<uint32_t> edge_offset_;  // per-check edge ranges
    std::vector<double> r_msg_;          // check -> variable messages
    std::vector<double> total_;
    std::vector<double> scratch_;
    std::vector<double> back_;
};

inline BpResult bp_decode(const CheckMatrix& h, const std::vector<double>& llr, const DecoderConfig& cfg) {
    BpDecoder dec(h);
    return dec.decode(llr, cfg);
}

struct StopRule {
    uint64_t min_frame_errors = 100;
    uint64_t max_frames = 100000;
};

// Per Eb/N0 point, decodes frames until the stop rule fires. The all-zero
// codeword is transmitted unless random_messages is set, in which case a
// fresh message is encoded per frame from the same per-frame stream.
inline std::vector<SimResult> simulate_fer(const CyclicCode& code, const CheckMatrix& h,
                                           const std::vector<ChannelConfig>& points, const DecoderConfig& dec,
                                           const StopRule& stop = {}, bool random_messages = false) {
    if (h.n_cols != code.n) throw LengthMismatch("check matrix is inconsistent with the code");
    BpDecoder decoder(h);
    BitMatrix gen = random_messages ? generator_matrix(code) : BitMatrix(1, 1);

    std::vector<SimResult> out;
    for (const ChannelConfig& point : points) {
        auto t0 = std::chrono::steady_clock::now();
        SimResult res;
        res.ebn0_db = point.ebn0_db;
        uint64_t iter_sum = 0;
        std::vector<uint8_t> cw(code.n, 0);

        while (res.frame_errors < stop.min_frame_errors && res.frames < stop.max_frames) {
            GaussianRng rng(point.seed ^ res.frames);
            if (random_messages) {
                std::fill(cw.begin(), cw.end(), 0);
                for (uint32_t i = 0; i < code.k; ++i)
                    if (rng.next_u64() & 1)
                        for (uint32_t c = 0; c < code.n; ++c) cw[c] ^= gen.get(i, c) ? 1 : 0;
            }
            std::vector<double> llr = bpsk_awgn_llr(cw, point, rng);
            BpResult r = decoder.decode(llr, dec);
            iter_sum += r.iterations;
            uint64_t bad = 0;
            for (uint32_t i = 0; i < code.n; ++i) bad += r.estimate[i] != cw[i];
            res.bit_errors += bad;
            res.frame_errors += bad != 0;
            ++res.frames;
        }

        res.fer = res.frames ? static_cast<double>(res.frame_errors) / static_cast<double>(res.frames) : 0.0;
        res.ber = res.frames
                      ? static_cast<double>(res.bit_errors) / (static_cast<double>(res.frames) * code.n)
                      : 0.0;
        res.avg_iterations = res.frames ? static_cast<double>(iter_sum) / static_cast<double>(res.frames) : 0.0;
        res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out.push_back(res);
    }
    return out;
}

// CSV interface consumed by external plotting tools; locale-independent.
inline std::string sim_results_csv(const std::vector<SimResult>& results) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(10);
    os << "ebn0_db,frames,frame_errors,fer,ber,avg_iterations\n";
    for (const SimResult& r : results)
        os << r.ebn0_db << ',' << r.frames << ',' << r.frame_errors << ',' << r.fer << ',' << r.ber << ','
           << r.avg_iterations << '\n';
    return os.str();
}

// Frame error probability of uncoded BPSK over k bits at the same Eb/N0.
inline double uncoded_frame_error_probability(double ebn0_db, uint32_t bits) {
    double p_bit = 0.5 * std::erfc(std::sqrt(std::pow(10.0, ebn0_db / 10.0)));
    return 1.0 - std::pow(1.0 - p_bit, static_cast<double>(bits));
}

}  // namespace msldpc

#endif
