#include "qcorr/csv.hpp"

#include <cstdio>
#include <ostream>

namespace qcorr {

std::string format_g12(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string event_line(const SuddenChangeEvent& ev) {
    std::string line = "#event tau_t=" + format_g12(ev.tau_t);
    line += " quantity=" + std::string(to_string(ev.quantity));
    line += " branch_before=" + std::string(to_string(ev.branch_before));
    line += " branch_after=" + std::string(to_string(ev.branch_after));
    line += " left_slope=" + format_g12(ev.left_slope);
    line += " right_slope=" + format_g12(ev.right_slope);
    line += ev.weak ? " weak=1" : " weak=0";
    return line;
}

void write_sweep_csv(std::ostream& out, const SweepResult& swept, const OracleColumns* oracle) {
    if (swept.rows.size() != swept.grid.size())
        throw validation_error("write_sweep_csv: rows and grid differ in length");
    if (oracle && (oracle->oracle_min.size() != swept.rows.size() ||
                   oracle->oracle_dev.size() != swept.rows.size()))
        throw validation_error("write_sweep_csv: oracle columns differ in length");

    out << "tau_t,eta_or_gamma_or_p,mutual_info,classical,discord,s1,s2,s3,argmin_branch";
    if (oracle) out << ",oracle_min,oracle_dev";
    out << "\n";

    for (std::size_t i = 0; i < swept.rows.size(); ++i) {
        const double tau_t = swept.grid[i];
        const CorrelationBreakdown& row = swept.rows[i];
        const double control = ChannelAtTime(swept.kind, swept.tau, tau_t / swept.tau).control();
        out << format_g12(tau_t) << ',' << format_g12(control) << ','
            << format_g12(row.mutual_info) << ',' << format_g12(row.classical) << ','
            << format_g12(row.discord) << ',' << format_g12(row.s1) << ',' << format_g12(row.s2)
            << ',' << format_g12(row.s3) << ',' << to_string(row.argmin_branch);
        if (oracle)
            out << ',' << format_g12(oracle->oracle_min[i]) << ','
                << format_g12(oracle->oracle_dev[i]);
        out << "\n";
    }

    for (const SuddenChangeEvent& ev : swept.events) out << event_line(ev) << "\n";
}

}  // namespace qcorr
