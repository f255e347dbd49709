#ifndef CUSPVOL_H
#define CUSPVOL_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CV_API __declspec(dllexport)
#else
#define CV_API __attribute__((visibility("default")))
#endif

typedef enum cv_status {
    CV_OK = 0,
    CV_ERR_DOMAIN = 1,
    CV_ERR_VALIDATION = 2,
    CV_ERR_PARSE = 3,
    CV_ERR_UNSUPPORTED = 4,
    CV_ERR_NOT_FOUND = 5,
    CV_ERR_INVALID_REGIME = 6,
    CV_ERR_NULL_ARGUMENT = 7,
    CV_ERR_INTERNAL = 8
} cv_status;

typedef struct cv_graph cv_graph;
typedef struct cv_report cv_report;

/* Message of the last failing call on this thread; empty after success. */
CV_API const char* cv_last_error(void);
CV_API const char* cv_status_name(cv_status status);
/* Releases strings returned through char** out-parameters. */
CV_API void cv_string_free(char* text);

CV_API cv_status cv_parse_angle(const char* text, double* out);

/* tol <= 0 selects the default tolerance. terms and est_error may be NULL. */
CV_API cv_status cv_lob(double x, double tol, double* value, long* terms, double* est_error);
CV_API cv_status cv_lob_integral(double x, double tol, double* value);

CV_API cv_status cv_mu3(double* out);
CV_API cv_status cv_omega3(double* out);
CV_API cv_status cv_v_star(double* out);
CV_API cv_status cv_d3_infinity(double* out);

CV_API cv_status cv_vol_orthoscheme(double alpha, double beta, int truncated, double* out);
CV_API cv_status cv_vol_ideal_tetrahedron(double alpha, double beta, double gamma, double* out);
/* Catalog entry or, for an uncatalogued tetrahedron symbol, its computed volume, as JSON. */
CV_API cv_status cv_volume_json(const char* symbol, char** json);
CV_API cv_status cv_catalog_json(char** json);

CV_API cv_status cv_graph_parse(const char* symbol, cv_graph** out);
CV_API cv_status cv_graph_from_json(const char* json, cv_graph** out);
CV_API void cv_graph_free(cv_graph* graph);
CV_API cv_status cv_graph_symbol(const cv_graph* graph, char** symbol);
CV_API cv_status cv_graph_json(const cv_graph* graph, char** json);
CV_API cv_status cv_graph_gram_json(const cv_graph* graph, char** json);
CV_API cv_status cv_graph_cusps(const cv_graph* graph, int* out);
/* arithmetic is set to 1 for ARITHMETIC and 0 for NON_ARITHMETIC; json may be NULL. */
CV_API cv_status cv_graph_arithmeticity(const cv_graph* graph, int* arithmetic, char** json);
CV_API cv_status cv_graph_volume(const cv_graph* graph, double* out);

CV_API cv_status cv_scenario_ids_json(char** json);
CV_API cv_status cv_scenario_json(const char* id, char** json);

/* only and fixture_json may be NULL. */
CV_API cv_status cv_certify(const char* only, const char* fixture_json, cv_report** out);
CV_API void cv_report_free(cv_report* report);
CV_API int cv_report_certified(const cv_report* report);
/* CV_ERR_NOT_FOUND when the run produced no volume. */
CV_API cv_status cv_report_minimum(const cv_report* report, double* out);
CV_API cv_status cv_report_json(const cv_report* report, char** json);
CV_API cv_status cv_report_failures_json(const cv_report* report, char** json);
CV_API cv_status cv_identities_json(char** json);
CV_API cv_status cv_thresholds_json(char** json);

CV_API cv_status cv_render_scenario(const char* id, int depth, int width, int height, double scale, char** svg);
CV_API cv_status cv_render(const char* cusp_type, double d, const char* placement, int depth, int width, int height,
                           double scale, char** svg);

#ifdef __cplusplus
}
#endif

#endif
