#include "closure/report.hpp"

#include "closure/csv.hpp"
#include "closure/errors.hpp"
#include "closure/filter.hpp"

#include <filesystem>
#include <string>

namespace closure {

void emit_report(const std::string& run_dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(run_dir)) throw ConfigError("emit_report: no such directory " + run_dir);

    const double z = normal_quantile(0.975);
    bool found_any = false;
    for (std::size_t t = 0;; ++t) {
        char tag[16];
        std::snprintf(tag, sizeof(tag), "%04zu", t);
        const std::string in_path = run_dir + "/closure_t" + tag + ".csv";
        if (!fs::exists(in_path)) break;
        found_any = true;

        const CsvTable table = read_csv(in_path);
        // 1D closure files have 4 columns (x, mean, std, truth); 2D have 5.
        const int dim = table.header.size() >= 5 ? 2 : 1;
        std::vector<std::string> band_header(table.header.begin(), table.header.begin() + dim);
        band_header.insert(band_header.end(), {"truth", "mean", "lower", "upper"});

        std::vector<std::vector<std::string>> band_rows;
        std::vector<std::vector<std::string>> residual_rows;
        band_rows.reserve(table.rows.size());
        for (const auto& row : table.rows) {
            const double mean = std::stod(row[dim]);
            const double std_dev = std::stod(row[dim + 1]);
            const double truth = std::stod(row[dim + 2]);
            std::vector<std::string> out(row.begin(), row.begin() + dim);
            out.push_back(format_double(truth));
            out.push_back(format_double(mean));
            out.push_back(format_double(mean - z * std_dev));
            out.push_back(format_double(mean + z * std_dev));
            band_rows.push_back(std::move(out));
            if (dim == 2) {
                residual_rows.push_back(
                    {row[0], row[1], format_double(truth - mean)});
            }
        }
        write_csv(run_dir + "/band_t" + tag + ".csv", band_header, band_rows);
        if (dim == 2)
            write_csv(run_dir + "/residual_t" + tag + ".csv", {"x", "y", "residual"},
                      residual_rows);
    }

    const std::string surface_path = run_dir + "/search_surface.csv";
    if (fs::exists(surface_path)) {
        found_any = true;
        const CsvTable surface = read_csv(surface_path);
        write_csv(run_dir + "/report_surface.csv", surface.header, surface.rows);
    }
    if (!found_any)
        throw ConfigError("emit_report: no run artifacts found in " + run_dir);
}

}  // namespace closure
