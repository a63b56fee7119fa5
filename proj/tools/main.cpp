#include <CLI11.hpp>
#include <cstdint>
#include <exception>
#include <iostream>
#include <vector>

#include "imudr/commands.hpp"
#include "imudr/imu_log.hpp"

int main(int argc, char** argv) {
  CLI::App app{"imudr - inertial dead-reckoning toolkit"};
  app.require_subcommand(1);

  imudr::RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run the estimation pipeline on an IMU log");
  run->add_option("--log", run_opt.log_path, "IMU log CSV")->required();
  run->add_option("--config", run_opt.config_path, "config file (key = value)");
  run->add_option("--calib", run_opt.calib_path, "calibration file");
  run->add_option("--out", run_opt.out_dir, "output directory");
  double run_dt = 0.0;
  auto* run_dt_opt = run->add_option("--dt", run_dt, "sampling period override, s");

  imudr::SimulateOptions sim_opt;
  double sim_orient_deg = 0.0;
  std::vector<double> sim_bias;
  auto* sim = app.add_subcommand("simulate", "Generate a synthetic IMU log from a motion script");
  sim->add_option("--script", sim_opt.script_path, "motion script file")->required();
  sim->add_option("--out", sim_opt.out_path, "output log path");
  sim->add_option("--calib", sim_opt.calib_path, "calibration file");
  sim->add_option("--dt", sim_opt.dt, "sampling period, s");
  sim->add_option("--seed", sim_opt.noise.seed, "noise seed");
  sim->add_option("--accel-noise", sim_opt.noise.accel_white_noise_std,
                  "accelerometer white-noise std, m/s^2");
  sim->add_option("--orient-noise-deg", sim_orient_deg,
                  "orientation error std, degrees");
  sim->add_option("--bias", sim_bias, "accelerometer bias bx by bz, m/s^2")
      ->expected(3);

  imudr::DriftOptions drift_opt;
  auto* drift = app.add_subcommand("drift", "Monte-Carlo drift-growth analysis");
  drift->add_option("--sigma", drift_opt.sigma_a, "accel white-noise std, m/s^2");
  drift->add_option("--duration", drift_opt.duration_s, "trial duration, s");
  drift->add_option("--trials", drift_opt.trials, "number of trials (>= 10)");
  drift->add_option("--dt", drift_opt.dt, "sampling period, s");
  drift->add_option("--seed", drift_opt.seed, "base seed");
  drift->add_option("--out", drift_opt.out_dir, "output directory");

  imudr::RoundtripOptions rt_opt;
  double rt_orient_deg = 0.0;
  auto* rt = app.add_subcommand("roundtrip", "Simulate, estimate, and compare against ground truth");
  rt->add_option("--script", rt_opt.script_path, "motion script file")->required();
  rt->add_option("--config", rt_opt.config_path, "config file");
  rt->add_option("--calib", rt_opt.calib_path, "calibration file");
  rt->add_option("--dt", rt_opt.dt, "sampling period, s");
  rt->add_option("--seed", rt_opt.noise.seed, "noise seed");
  rt->add_option("--accel-noise", rt_opt.noise.accel_white_noise_std,
                 "accelerometer white-noise std, m/s^2");
  rt->add_option("--orient-noise-deg", rt_orient_deg,
                 "orientation error std, degrees");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      if (*run_dt_opt) run_opt.dt = run_dt;
      imudr::command_run(run_opt, std::cout);
    } else if (*sim) {
      sim_opt.noise.orientation_error_std = imudr::deg_to_rad(sim_orient_deg);
      if (!sim_bias.empty()) {
        sim_opt.noise.accel_bias = imudr::Vec3(sim_bias[0], sim_bias[1], sim_bias[2]);
      }
      imudr::command_simulate(sim_opt, std::cout);
    } else if (*drift) {
      imudr::command_drift(drift_opt, std::cout);
    } else if (*rt) {
      rt_opt.noise.orientation_error_std = imudr::deg_to_rad(rt_orient_deg);
      imudr::command_roundtrip(rt_opt, std::cout);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
