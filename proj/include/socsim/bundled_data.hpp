// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "socsim/calib.hpp"

namespace socsim {

// Measured values for the Snapdragon 865 SoC cluster and the comparison
// Xeon + A40 / A100 servers. Tag conventions:
//   engine "inference"             physical-SoC DL runs
//   engine "inference-virtualized" the same runs inside containers
//   engine "tflite"                headline DL latencies / efficiency
//   engine "vs:<hardware>[/ctx]"   efficiency-ratio baseline
//   workload suffix "@<ctx>"       load context (single stream, 5 samples/s, N SoCs)
inline constexpr std::string_view kBundledCalibrationCsv = R"csv(hardware,engine,workload,metric,value,spread,provenance,citation
soc-cpu,software-encode,video:V1,max-streams-per-soc,13,,paper-table,"video metadata table: max stream num per SoC, V1 holi, CPU"
soc-cpu,software-encode,video:V2,max-streams-per-soc,15,,paper-table,"video metadata table: max stream num per SoC, V2 desktop, CPU"
soc-cpu,software-encode,video:V3,max-streams-per-soc,4,,paper-table,"video metadata table: max stream num per SoC, V3 game3, CPU"
soc-cpu,software-encode,video:V4,max-streams-per-soc,9,,paper-table,"video metadata table: max stream num per SoC, V4 presentation, CPU"
soc-cpu,software-encode,video:V5,max-streams-per-soc,3,,paper-table,"video metadata table: max stream num per SoC, V5 hall, CPU"
soc-cpu,software-encode,video:V6,max-streams-per-soc,1,,paper-table,"video metadata table: max stream num per SoC, V6 chicken, CPU"
soc-codec,hw-codec,video:V1,max-streams-per-soc,16,,paper-table,"video metadata table: max stream num per SoC, V1 holi, HW"
soc-codec,hw-codec,video:V2,max-streams-per-soc,16,,paper-table,"video metadata table: max stream num per SoC, V2 desktop, HW"
soc-codec,hw-codec,video:V3,max-streams-per-soc,12,,paper-table,"video metadata table: max stream num per SoC, V3 game3, HW"
soc-codec,hw-codec,video:V4,max-streams-per-soc,16,,paper-table,"video metadata table: max stream num per SoC, V4 presentation, HW"
soc-codec,hw-codec,video:V5,max-streams-per-soc,7,,paper-table,"video metadata table: max stream num per SoC, V5 hall, HW"
soc-codec,hw-codec,video:V6,max-streams-per-soc,2,,paper-table,"video metadata table: max stream num per SoC, V6 chicken, HW"
nvidia-a40,software-encode,video:V4@1-stream,streams-per-watt,0.018,,paper-text,"live transcoding scaling: A40 processes 0.018 live streams per watt with a single V4 stream"
intel-cpu-8core,vs:nvidia-a40,video:V4@1-stream,efficiency-ratio,14.9,,paper-text,"live transcoding scaling: single-stream A40 falls 14.9x behind the Intel CPU"
soc-cpu,vs:nvidia-a40,video:V4@1-stream,efficiency-ratio,40.8,,paper-text,"live transcoding scaling: single-stream A40 falls 40.8x behind SoC CPUs"
nvidia-a40,server-peak,video:V5,power-watts,1231,,paper-table,"TCO table: avg peak power, edge server with 8x A40, live V5"
intel-cpu-8core,server-peak,video:V5,power-watts,633,,paper-table,"TCO table: avg peak power, edge server without GPU, live V5"
soc-cpu,server-peak,video:V5,power-watts,589,,paper-table,"TCO table: avg peak power, SoC cluster, live V5"
soc-gpu,tflite,dl:resnet50-fp32,latency-ms,32.7,,paper-text,"DL latency: ResNet-50 FP32 on SoC GPU 32.7 ms"
soc-dsp,tflite,dl:resnet50-int8,latency-ms,8.8,,paper-text,"DL latency: ResNet-50 INT8 on SoC DSP 8.8 ms"
soc-gpu,tflite,dl:resnet50-fp32,frames-per-joule,18,,paper-text,"DL efficiency: SoC GPUs process about 18 frames per second per Joule on ResNet-50 FP32"
soc-gpu,vs:intel-cpu-8core,dl:resnet50-fp32,efficiency-ratio,7.09,,paper-text,"DL efficiency: ResNet-50 FP32 SoC GPU 7.09x the Intel CPU"
soc-gpu,vs:nvidia-a40/bs64,dl:resnet50-fp32,efficiency-ratio,1.78,,paper-text,"DL efficiency: ResNet-50 FP32 SoC GPU 1.78x the A40 (BS=64)"
soc-gpu,vs:nvidia-a100/bs64,dl:resnet50-fp32,efficiency-ratio,1.15,,paper-text,"DL efficiency: ResNet-50 FP32 SoC GPU 1.15x the A100 (BS=64)"
soc-dsp,vs:intel-cpu-8core,dl:resnet152-int8,efficiency-ratio,42,,paper-text,"DL efficiency: ResNet-152 INT8 SoC DSP 42x the Intel CPU"
soc-dsp,vs:nvidia-a100/bs64,dl:resnet152-int8,efficiency-ratio,1.5,,paper-text,"DL efficiency: ResNet-152 INT8 SoC DSP 1.5x the A100 (BS=64)"
soc-gpu,vs:nvidia-a100,dl:resnet50-fp32@5-sps,efficiency-ratio,5.71,,paper-text,"DL load sweep: SoC cluster 5.71x more energy-efficient than the A100 at five samples per second"
soc-cpu,mnn-tp-compute,dl:resnet50-fp32@1-soc,latency-ms,80,,paper-text,"collaborative inference: ResNet-50 computation time 80 ms on one SoC"
soc-cpu,mnn-tp-compute,dl:resnet50-fp32@5-soc,latency-ms,34,,paper-text,"collaborative inference: ResNet-50 computation time 34 ms on five SoCs"
soc-cpu,mnn-tp,dl:resnet50-fp32@5-soc,speedup,1.38,,paper-text,"collaborative inference: end-to-end speedup 1.38x with five SoCs"
soc-cpu,mnn-tp,dl:resnet50-fp32@5-soc,comm-share-pct,41.5,,paper-text,"collaborative inference: communication is 41.5% of latency with five SoCs"
soc-cpu,mnn-tp-pipelined,dl:resnet50-fp32@5-soc,comm-share-pct,22.9,,paper-text,"collaborative inference with pipelining: communication is 22.9% of latency with five SoCs"
soc-cpu,inference,dl:resnet50-fp32,latency-ms,81.2,0.2,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Phy. latency"
soc-cpu,inference,dl:resnet50-fp32,cpu-util-pct,52.1,0.3,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Phy. CPU"
soc-cpu,inference,dl:resnet50-fp32,gpu-util-pct,0.7,0.3,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Phy. GPU"
soc-cpu,inference,dl:resnet50-fp32,mem-util-pct,32.3,0.7,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Phy. Mem"
soc-cpu,inference-virtualized,dl:resnet50-fp32,latency-ms,80.4,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Vir. latency"
soc-cpu,inference-virtualized,dl:resnet50-fp32,cpu-util-pct,53.1,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Vir. CPU"
soc-cpu,inference-virtualized,dl:resnet50-fp32,gpu-util-pct,0.5,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Vir. GPU"
soc-cpu,inference-virtualized,dl:resnet50-fp32,mem-util-pct,37.7,0.2,paper-table,"physical vs virtualized SoC table: R50 SoC CPU Vir. Mem"
soc-gpu,inference,dl:resnet50-fp32,latency-ms,32.5,0.4,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Phy. latency"
soc-gpu,inference,dl:resnet50-fp32,cpu-util-pct,9.0,5.7,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Phy. CPU"
soc-gpu,inference,dl:resnet50-fp32,gpu-util-pct,73.9,1.2,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Phy. GPU"
soc-gpu,inference,dl:resnet50-fp32,mem-util-pct,35.2,5.7,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Phy. Mem"
soc-gpu,inference-virtualized,dl:resnet50-fp32,latency-ms,33.9,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Vir. latency"
soc-gpu,inference-virtualized,dl:resnet50-fp32,cpu-util-pct,9.5,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Vir. CPU"
soc-gpu,inference-virtualized,dl:resnet50-fp32,gpu-util-pct,71.3,0.6,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Vir. GPU"
soc-gpu,inference-virtualized,dl:resnet50-fp32,mem-util-pct,37.6,0.3,paper-table,"physical vs virtualized SoC table: R50 SoC GPU Vir. Mem"
soc-dsp,inference,dl:resnet50-int8,latency-ms,11.0,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Phy. latency"
soc-dsp,inference,dl:resnet50-int8,cpu-util-pct,5.2,2.1,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Phy. CPU"
soc-dsp,inference,dl:resnet50-int8,gpu-util-pct,0.6,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Phy. GPU"
soc-dsp,inference,dl:resnet50-int8,mem-util-pct,32.7,1.9,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Phy. Mem"
soc-dsp,inference-virtualized,dl:resnet50-int8,latency-ms,10.5,0.01,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Vir. latency"
soc-dsp,inference-virtualized,dl:resnet50-int8,cpu-util-pct,5.7,0.3,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Vir. CPU"
soc-dsp,inference-virtualized,dl:resnet50-int8,gpu-util-pct,0.6,0.1,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Vir. GPU"
soc-dsp,inference-virtualized,dl:resnet50-int8,mem-util-pct,37.4,0.2,paper-table,"physical vs virtualized SoC table: R50 SoC DSP Vir. Mem"
soc-cpu,inference,dl:resnet152-fp32,latency-ms,258.3,0.4,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Phy. latency"
soc-cpu,inference,dl:resnet152-fp32,cpu-util-pct,53.3,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Phy. CPU"
soc-cpu,inference,dl:resnet152-fp32,gpu-util-pct,0.4,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Phy. GPU"
soc-cpu,inference,dl:resnet152-fp32,mem-util-pct,34.9,1.0,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Phy. Mem"
soc-cpu,inference-virtualized,dl:resnet152-fp32,latency-ms,257.8,1.0,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Vir. latency"
soc-cpu,inference-virtualized,dl:resnet152-fp32,cpu-util-pct,53.9,0.3,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Vir. CPU"
soc-cpu,inference-virtualized,dl:resnet152-fp32,gpu-util-pct,0.6,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Vir. GPU"
soc-cpu,inference-virtualized,dl:resnet152-fp32,mem-util-pct,40.1,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC CPU Vir. Mem"
soc-gpu,inference,dl:resnet152-fp32,latency-ms,100.9,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Phy. latency"
soc-gpu,inference,dl:resnet152-fp32,cpu-util-pct,5.9,0.5,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Phy. CPU"
soc-gpu,inference,dl:resnet152-fp32,gpu-util-pct,81.1,0.5,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Phy. GPU"
soc-gpu,inference,dl:resnet152-fp32,mem-util-pct,35.6,2.1,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Phy. Mem"
soc-gpu,inference-virtualized,dl:resnet152-fp32,latency-ms,102.8,0.2,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Vir. latency"
soc-gpu,inference-virtualized,dl:resnet152-fp32,cpu-util-pct,8.6,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Vir. CPU"
soc-gpu,inference-virtualized,dl:resnet152-fp32,gpu-util-pct,78.5,0.2,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Vir. GPU"
soc-gpu,inference-virtualized,dl:resnet152-fp32,mem-util-pct,39.8,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC GPU Vir. Mem"
soc-dsp,inference,dl:resnet152-int8,latency-ms,21.0,0.04,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Phy. latency"
soc-dsp,inference,dl:resnet152-int8,cpu-util-pct,6.0,0.9,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Phy. CPU"
soc-dsp,inference,dl:resnet152-int8,gpu-util-pct,0.7,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Phy. GPU"
soc-dsp,inference,dl:resnet152-int8,mem-util-pct,33.7,0.8,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Phy. Mem"
soc-dsp,inference-virtualized,dl:resnet152-int8,latency-ms,20.4,0.02,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Vir. latency"
soc-dsp,inference-virtualized,dl:resnet152-int8,cpu-util-pct,7.1,0.5,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Vir. CPU"
soc-dsp,inference-virtualized,dl:resnet152-int8,gpu-util-pct,0.6,0.1,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Vir. GPU"
soc-dsp,inference-virtualized,dl:resnet152-int8,mem-util-pct,39.0,0.2,paper-table,"physical vs virtualized SoC table: R152 SoC DSP Vir. Mem"
soc-cpu,inference,dl:yolov5x-fp32,latency-ms,1121.3,13.7,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Phy. latency"
soc-cpu,inference,dl:yolov5x-fp32,cpu-util-pct,53.9,0.2,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Phy. CPU"
soc-cpu,inference,dl:yolov5x-fp32,gpu-util-pct,0.5,0.1,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Phy. GPU"
soc-cpu,inference,dl:yolov5x-fp32,mem-util-pct,40.1,0.6,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Phy. Mem"
soc-cpu,inference-virtualized,dl:yolov5x-fp32,latency-ms,1113.9,2.8,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Vir. latency"
soc-cpu,inference-virtualized,dl:yolov5x-fp32,cpu-util-pct,54.5,0.1,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Vir. CPU"
soc-cpu,inference-virtualized,dl:yolov5x-fp32,gpu-util-pct,0.6,0.04,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Vir. GPU"
soc-cpu,inference-virtualized,dl:yolov5x-fp32,mem-util-pct,45.9,0.1,paper-table,"physical vs virtualized SoC table: YOLO SoC CPU Vir. Mem"
soc-gpu,inference,dl:yolov5x-fp32,latency-ms,620.6,1.0,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Phy. latency"
soc-gpu,inference,dl:yolov5x-fp32,cpu-util-pct,5.3,0.2,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Phy. CPU"
soc-gpu,inference,dl:yolov5x-fp32,gpu-util-pct,82.5,0.1,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Phy. GPU"
soc-gpu,inference,dl:yolov5x-fp32,mem-util-pct,39.5,3.3,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Phy. Mem"
soc-gpu,inference-virtualized,dl:yolov5x-fp32,latency-ms,683.7,4.1,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Vir. latency"
soc-gpu,inference-virtualized,dl:yolov5x-fp32,cpu-util-pct,7.6,0.1,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Vir. CPU"
soc-gpu,inference-virtualized,dl:yolov5x-fp32,gpu-util-pct,77.1,0.4,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Vir. GPU"
soc-gpu,inference-virtualized,dl:yolov5x-fp32,mem-util-pct,44.2,0.4,paper-table,"physical vs virtualized SoC table: YOLO SoC GPU Vir. Mem"
)csv";

/// The bundled measurement dataset. Parsed once; every record carries a
/// paper-* provenance and a citation.
inline const CalibrationTable& bundled_calibration() {
  static const CalibrationTable table = parse_calibration(kBundledCalibrationCsv);
  return table;
}

/// The six live-transcoding test videos (bitrates in kbps).
inline const std::vector<VideoProfile>& bundled_videos() {
  static const std::vector<VideoProfile> videos = {
      {"V1", "holi", 854, 480, 30, 7.0, 2800, 819.8},
      {"V2", "desktop", 1280, 720, 30, 0.2, 181, 90.5},
      {"V3", "game3", 1280, 720, 59, 6.1, 5600, 2700},
      {"V4", "presentation", 1920, 1080, 25, 0.2, 430, 215},
      {"V5", "hall", 1920, 1080, 29, 7.7, 16000, 4100},
      {"V6", "chicken", 3840, 2160, 30, 5.9, 49000, 16600},
  };
  return videos;
}

inline const VideoProfile& bundled_video(std::string_view name) {
  for (const auto& v : bundled_videos())
    if (v.name == name || v.title == name) return v;
  throw MissingCalibration("unknown video '" + std::string(name) + "'");
}

inline const std::vector<DlModelProfile>& bundled_models() {
  static const std::vector<DlModelProfile> models = {
      {"resnet50", Precision::fp32, "classification"},  {"resnet50", Precision::int8, "classification"},
      {"resnet152", Precision::fp32, "classification"}, {"resnet152", Precision::int8, "classification"},
      {"yolov5x", Precision::fp32, "detection"},        {"bert", Precision::fp32, "nlp"},
  };
  return models;
}

}  // namespace socsim
