/* C interface to the certification library. All functions return an error
 * code; outputs are heap strings released with hc_string_free. Handles are
 * opaque and owned by the caller via hc_system_destroy. Error messages for
 * the most recent failing call on the current thread are available through
 * hc_last_error. */
#ifndef HYPERCERT_H
#define HYPERCERT_H

#ifdef __cplusplus
extern "C" {
#endif

enum hc_status {
  HC_OK = 0,
  HC_ERR_USAGE = 1,
  HC_INCONCLUSIVE = 2,  /* certification gave up; witness report in output */
  HC_NOT_FOUND = 3,     /* falsifier found no witness */
  HC_ERR_DOMAIN = 4,
  HC_ERR_UNSUPPORTED = 5,
  HC_ERR_CERTIFICATE = 6,
  HC_ERR_INTERNAL = 7
};

typedef struct hc_system hc_system;

const char* hc_version(void);
/* Message from the last failing call on this thread; never NULL. */
const char* hc_last_error(void);
void hc_string_free(char* s);

/* params: n_params strings of the form "key=value". */
int hc_system_create(const char* id, const char* const* params, int n_params,
                     hc_system** out);
void hc_system_destroy(hc_system* sys);

/* JSON array of {id, params, description}. */
int hc_gallery_json(char** out_json);

/* observable: "lambda", "cu", "cs" or "center". splitting_iters > 0 forces
 * a power-iteration splitting with that many steps; 0 uses the exact gallery
 * splitting when one exists and 30 iterations otherwise. threads <= 0 reads
 * HYPERCERT_THREADS (0 or unset = auto). HC_OK writes a certificate,
 * HC_INCONCLUSIVE a witness report. */
int hc_certify(const hc_system* sys, const char* observable, double rate,
               int n_max, int depth_max, int threads, int splitting_iters,
               char** out_json);

/* Both directions at once: expansion along E^cu at r_cu, contraction along
 * E^cs at r_cs. HC_INCONCLUSIVE output holds the failing side's report(s). */
int hc_certify_hyperbolic(const hc_system* sys, double r_cu, double r_cs,
                          int n_max, int depth_max, int threads,
                          int splitting_iters, char** out_json);

/* Periodic-orbit search up to period_max. HC_OK: witness orbit JSON whose
 * average of log |(df)^{-1}| is >= -1e-10. HC_NOT_FOUND: every orbit has a
 * strictly negative average. */
int hc_falsify(const hc_system* sys, int period_max, char** out_json);

/* Monte Carlo check of the expansion inequality claimed by a serialized
 * certificate document (cover or hyperbolic). min_ratio >= 1 supports the
 * certificate. out_json (optional, may be NULL) receives a report. */
int hc_verify(const char* cert_json, int samples, long n_max,
              unsigned long long seed, double* min_ratio, char** out_json);

/* CSV "n,average,exponent" with `length` rows: per-time running averages of
 * log |(df)^{-1}| and finite-time Lyapunov exponents, averaged over `orbits`
 * seeded random starting points. */
int hc_lyapunov_csv(const hc_system* sys, int orbits, long length,
                    unsigned long long seed, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* HYPERCERT_H */
