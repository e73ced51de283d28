# tests/oracle/stoi_reference.py

# Copyright 2026  Daptain Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#  http://www.apache.org/licenses/LICENSE-2.0
#
# THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
# WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
# MERCHANTABLITY OR NON-INFRINGEMENT.
# See the Apache 2 License for the specific language governing permissions and
# limitations under the License.

"""Reference STOI used to freeze the expected values in test_eval.cc.

Independent NumPy implementation of the published short-time objective
intelligibility measure: resample to 10 kHz, drop frames more than 40 dB
below the loudest clean frame, correlate 15 one-third-octave band envelopes
over 30-frame segments with the processed envelope clipped at -15 dB SDR.

The polyphase resampler matches the production kernel (Kaiser beta 8,
half-width 24 input samples) so the comparison isolates the STOI math.

Usage:
  DAPTAIN_DUMP_STOI_VECTORS=/tmp/vec build/tests/daptain_tests \
      --test-case="stoi matches*"   # writes pair_00_{clean,proc}.wav ...
  python3 tests/oracle/stoi_reference.py /tmp/vec
"""

import sys
from pathlib import Path

import numpy as np
from scipy.io import wavfile

FS = 10000
FRAME = 256
HOP = 128
NFFT = 512
NBANDS = 15
MINFREQ = 150.0
SEG = 30
DYN_RANGE = 40.0
BETA = -15.0
EPS = np.finfo(np.float64).eps


def read_wav(path):
    rate, data = wavfile.read(path)
    if data.dtype == np.int16:
        data = data.astype(np.float64) / 32768.0
    else:
        data = data.astype(np.float64)
    return rate, data


def kaiser_sinc_resample(x, src_rate, dst_rate):
    if src_rate == dst_rate:
        return x
    g = np.gcd(src_rate, dst_rate)
    up, down = dst_rate // g, src_rate // g
    out_len = int(round(len(x) * dst_rate / src_rate))
    cutoff = 0.5 * min(1.0, up / down)
    half_width = 24.0 * max(1.0, down / up)
    beta = 8.0
    i0_beta = np.i0(beta)
    out = np.zeros(out_len)
    for n in range(out_len):
        center = n * down / up
        k_lo = max(0, int(np.ceil(center - half_width)))
        k_hi = min(len(x) - 1, int(np.floor(center + half_width)))
        k = np.arange(k_lo, k_hi + 1)
        t = center - k
        u = t / half_width
        window = np.i0(beta * np.sqrt(np.maximum(0.0, 1.0 - u * u))) / i0_beta
        out[n] = np.sum(x[k] * 2.0 * cutoff * np.sinc(2.0 * cutoff * t) * window)
    return out


def stoi_window():
    i = np.arange(FRAME)
    return 0.5 * (1.0 - np.cos(2.0 * np.pi * (i + 1) / (FRAME + 1)))


def frame_signal(x):
    count = 0 if len(x) < FRAME else (len(x) - FRAME) // HOP + 1
    return np.stack([x[t * HOP:t * HOP + FRAME] for t in range(count)])


def third_octave_bands():
    bin_hz = FS / NFFT
    bands = []
    for k in range(NBANDS):
        lo = MINFREQ * 2.0 ** ((2 * k - 1) / 6.0)
        hi = MINFREQ * 2.0 ** ((2 * k + 1) / 6.0)
        bands.append((int(round(lo / bin_hz)), int(round(hi / bin_hz))))
    return bands


def band_envelopes(x):
    w = stoi_window()
    frames = frame_signal(x) * w
    spec = np.abs(np.fft.rfft(frames, NFFT, axis=1)) ** 2
    env = np.empty((NBANDS, frames.shape[0]))
    for b, (lo, hi) in enumerate(third_octave_bands()):
        env[b] = np.sqrt(np.sum(spec[:, lo:hi], axis=1))
    return env


def remove_silent_frames(x, y):
    w = stoi_window()
    xf = frame_signal(x) * w
    yf = frame_signal(y) * w
    energies = 20.0 * np.log10(np.linalg.norm(xf, axis=1) + EPS)
    mask = energies > np.max(energies) - DYN_RANGE
    xf, yf = xf[mask], yf[mask]
    n = (len(xf) - 1) * HOP + FRAME
    xs, ys = np.zeros(n), np.zeros(n)
    for i in range(len(xf)):
        xs[i * HOP:i * HOP + FRAME] += xf[i]
        ys[i * HOP:i * HOP + FRAME] += yf[i]
    return xs, ys


def stoi(clean, processed, rate):
    x = kaiser_sinc_resample(clean, rate, FS)
    y = kaiser_sinc_resample(processed, rate, FS)
    x, y = remove_silent_frames(x, y)
    xe = band_envelopes(x)
    ye = band_envelopes(y)
    clip_gain = 1.0 + 10.0 ** (-BETA / 20.0)
    total, count = 0.0, 0
    for m in range(SEG, xe.shape[1] + 1):
        xs = xe[:, m - SEG:m]
        ys = ye[:, m - SEG:m]
        alpha = np.linalg.norm(xs, axis=1, keepdims=True) / (
            np.linalg.norm(ys, axis=1, keepdims=True) + EPS)
        yp = np.minimum(alpha * ys, clip_gain * xs)
        xc = xs - xs.mean(axis=1, keepdims=True)
        yc = yp - yp.mean(axis=1, keepdims=True)
        corr = np.sum(xc * yc, axis=1) / (
            (np.linalg.norm(xc, axis=1) + EPS) *
            (np.linalg.norm(yc, axis=1) + EPS))
        total += np.sum(corr)
        count += NBANDS
    return float(np.clip(total / count, 0.0, 1.0))


def main():
    vec_dir = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    cleans = sorted(vec_dir.glob("pair_*_clean.wav"))
    if not cleans:
        print(f"no pair_*_clean.wav files under {vec_dir}", file=sys.stderr)
        return 1
    for clean_path in cleans:
        proc_path = Path(str(clean_path).replace("_clean.wav", "_proc.wav"))
        rate, clean = read_wav(clean_path)
        prate, proc = read_wav(proc_path)
        assert rate == prate and len(clean) == len(proc)
        print(f"{clean_path.stem[:-6]}: {stoi(clean, proc, rate):.6f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
