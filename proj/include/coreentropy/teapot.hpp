#pragma once
// Master Teapot and Thurston set point clouds for a principal vein.

#include "coreentropy/polyalg.hpp"
#include "coreentropy/words.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ce {

struct TeapotPoint {
    cplx z;
    double lambda = 1;
    int period = 0;
    SimplifiedWord itinerary;
    bool minimal = false;
};

struct PointCloud {
    int p = 1, q = 2;
    int max_period = 0;
    EnumMode mode = EnumMode::All;
    bool strip = false;
    std::vector<TeapotPoint> points;
    long long words = 0;
    double seconds = 0;
};

struct GenerateOptions {
    int jobs = 1;
    bool strip_cyclotomic = false;
    double tolerance = 1e-12;
    // Directory of cached kneading polynomials; empty disables the cache.
    std::string cache_dir;
};

extern const char* const kToolVersion;

// Points sorted by (period, itinerary, re, im); the period-1 word is skipped.
// In mode all every parameter appears under both of its one-sided
// itineraries (last symbol 0 and 1) when both are admissible words.
PointCloud generate(int p, int q, int max_period, EnumMode mode, const GenerateOptions& opt = {});

void write_csv(const PointCloud& cloud, std::ostream& os);
void write_jsonl(const PointCloud& cloud, std::ostream& os);
// Reads the CSV written by write_csv.
std::vector<TeapotPoint> read_csv(std::istream& is);

// Roots of the polynomial of a minimal word; throws NotMinimal.
RootSet z_of_lambda(int p, int q, const SimplifiedWord& w);

// Eigenvalues with the growth rate forgotten, deduplicated within tol.
std::vector<cplx> thurston_projection(const PointCloud& cloud, double tol = 1e-9);

struct PersistenceStep {
    int N = 0;
    SimplifiedWord word;
    double inside_distance = 0;  // Hausdorff distance of roots inside the disk
    double lambda_gap = 0;       // |lambda - lambda(w1)|
};

struct PersistenceReport {
    SimplifiedWord w0, w1, connector;
    std::vector<PersistenceStep> steps;
    bool monotone = true;
};

// Words w1^N w' w0^N with the shortest connector w' (over all N) that keeps
// every word realizable. Throws ConnectorNotFound.
PersistenceReport persistence_probe(int p, int q, const SimplifiedWord& w0, const SimplifiedWord& w1,
                                    const std::vector<int>& Ns, int max_connector = 8);

}  // namespace ce
