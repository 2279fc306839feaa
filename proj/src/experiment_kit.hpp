#pragma once

// Shared plumbing for the experiment implementations.

#include <map>
#include <random>

#include "vislab/experiments.hpp"

namespace vislab::detail {

class Params {
public:
    Params(const Json& j, std::vector<std::string> allowed, const std::string& experiment);
    double num(const std::string& key, double fallback) const;
    int integer(const std::string& key, int fallback) const;
    std::vector<double> nums(const std::string& key, std::vector<double> fallback) const;
    std::vector<int> ints(const std::string& key, std::vector<int> fallback) const;
    Complex point(const std::string& key, Complex fallback) const;
    Box box(const std::string& key, Box fallback) const;

private:
    const Json& j_;
};

/// Accumulates metadata and files for one run.
class Kit {
public:
    explicit Kit(const ExperimentConfig& c);

    const ExperimentConfig& cfg;
    std::string hash;
    double grid_h = 0.0;
    std::map<std::string, long long> truncation;
    std::mt19937_64 rng;

    void note_truncation(const std::map<std::string, long long>& t);
    std::vector<std::pair<std::string, std::string>> meta() const;
    CsvTable table(std::vector<std::string> header) const;
    void add_csv(const std::string& name, CsvTable t);
    void add_svg(const std::string& name, const DomainSpec& d, const Box& window, const std::vector<SvgOverlay>& ov,
                 double shade_h);
    Bundle finish(Json results, bool pass);

private:
    std::vector<std::pair<std::string, std::string>> files_;
};

DomainSpec domain_or(const ExperimentConfig& c, DomainSpec fallback);
std::string cpx(Complex z);

Bundle takagi_non_goldilocks(const ExperimentConfig& c);
Bundle sector_slope_experiment(const ExperimentConfig& c);
Bundle gromov_disk(const ExperimentConfig& c);
Bundle royden_disks(const ExperimentConfig& c);
Bundle reparam_suite(const ExperimentConfig& c);
Bundle comb_nonvisibility(const ExperimentConfig& c);
Bundle vt_visibility(const ExperimentConfig& c);
Bundle end_profile_ut(const ExperimentConfig& c);
Bundle local_connectivity(const ExperimentConfig& c);
Bundle cantor_slit(const ExperimentConfig& c);

}  // namespace vislab::detail
