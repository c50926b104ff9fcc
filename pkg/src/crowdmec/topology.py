"""Station sets, normalized latency matrices, roles, and relay selection.

Stations are lat/lon points (cellular base stations). Network latency
between two stations is modeled as their great-circle distance on a
6371 km sphere, normalized by the maximum pairwise distance so all
off-diagonal entries fall in (0, 1]. Coincident stations get a small
floor entry instead of zero to stay inside that range.

Real base-station coordinates are not bundled; ``synth_stations``
draws them from a Gaussian-mixture city model instead. The presets
``shanghai`` (3234 stations) and ``beijing`` (967 stations) provide
clustered, deliberately unbalanced layouts at those two city centers.

The baseline platform site is chosen among the most central stations
(least total distance to all others, ``candidate_platforms``); the
decentralized mode routes each transfer through the masternode with
the least worker-to-publisher detour (``best_relay``). The distance
metric for both is the same great-circle measure used for latency.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

EARTH_RADIUS_KM = 6371.0
KM_PER_DEG_LAT = math.pi * EARTH_RADIUS_KM / 180.0
# Entry used for distinct stations at identical coordinates, keeping
# normalized latencies inside (0, 1].
DUPLICATE_FLOOR = 1e-6

STATION_CSV_HEADER = ("id", "lat", "lon")


@dataclass(frozen=True)
class Station:
    id: str
    lat: float
    lon: float

    def __post_init__(self):
        if not self.id:
            raise ValueError("station id must be nonempty")
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"lat must lie in [-90, 90], got {self.lat!r}")
        if not -180.0 <= self.lon <= 180.0:
            raise ValueError(f"lon must lie in [-180, 180], got {self.lon!r}")


class Cluster(NamedTuple):
    center_lat: float
    center_lon: float
    stddev_km: float
    weight: float


@dataclass(frozen=True)
class Preset:
    name: str
    count: int
    clusters: tuple[Cluster, ...]


PRESETS = {
    "shanghai": Preset(
        "shanghai",
        3234,
        (
            Cluster(31.23, 121.47, 6.0, 0.45),
            Cluster(31.30, 121.35, 10.0, 0.20),
            Cluster(31.14, 121.66, 12.0, 0.15),
            Cluster(31.05, 121.40, 15.0, 0.10),
            Cluster(31.40, 121.55, 18.0, 0.10),
        ),
    ),
    "beijing": Preset(
        "beijing",
        967,
        (
            Cluster(39.91, 116.40, 6.0, 0.50),
            Cluster(40.00, 116.33, 10.0, 0.20),
            Cluster(39.80, 116.52, 12.0, 0.15),
            Cluster(39.95, 116.60, 16.0, 0.15),
        ),
    ),
}


def haversine_km(lat1, lon1, lat2, lon2):
    """Great-circle distance in km; accepts scalars or numpy arrays."""
    lat1, lon1, lat2, lon2 = (np.radians(np.asarray(v, dtype=float)) for v in (lat1, lon1, lat2, lon2))
    a = (
        np.sin((lat2 - lat1) / 2.0) ** 2
        + np.cos(lat1) * np.cos(lat2) * np.sin((lon2 - lon1) / 2.0) ** 2
    )
    d = 2.0 * EARTH_RADIUS_KM * np.arcsin(np.minimum(1.0, np.sqrt(a)))
    return float(d) if np.isscalar(lat1) or d.ndim == 0 else d


def distance_matrix_km(stations, block: int = 512) -> np.ndarray:
    """Symmetric pairwise great-circle distances, zero diagonal.

    Computed in row blocks to bound temporary memory for large n.
    """
    lat = np.radians(np.array([s.lat for s in stations], dtype=float))
    lon = np.radians(np.array([s.lon for s in stations], dtype=float))
    n = len(stations)
    out = np.empty((n, n), dtype=float)
    cos_lat = np.cos(lat)
    for start in range(0, n, block):
        rows = slice(start, min(start + block, n))
        a = (
            np.sin((lat[None, :] - lat[rows, None]) / 2.0) ** 2
            + cos_lat[rows, None]
            * cos_lat[None, :]
            * np.sin((lon[None, :] - lon[rows, None]) / 2.0) ** 2
        )
        out[rows] = 2.0 * EARTH_RADIUS_KM * np.arcsin(np.minimum(1.0, np.sqrt(a)))
    lower = np.tril_indices(n, -1)
    out[lower] = out.T[lower]  # exact symmetry regardless of rounding
    np.fill_diagonal(out, 0.0)
    return out


def load_stations(path) -> list[Station]:
    """Read stations from a CSV with header ``id,lat,lon``."""
    path = Path(path)
    stations: list[Station] = []
    seen: set[str] = set()
    with open(path, newline="") as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header != list(STATION_CSV_HEADER):
            raise ValueError(
                f"{path}: expected header {','.join(STATION_CSV_HEADER)}, got {header!r}"
            )
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 3:
                raise ValueError(f"{path} row {lineno}: expected 3 fields, got {len(row)}")
            sid = row[0]
            try:
                station = Station(sid, float(row[1]), float(row[2]))
            except ValueError as err:
                raise ValueError(f"{path} row {lineno}: {err}") from None
            if sid in seen:
                raise ValueError(f"{path} row {lineno}: duplicate station id {sid!r}")
            seen.add(sid)
            stations.append(station)
    return stations


def write_stations_csv(stations, path) -> None:
    with open(Path(path), "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(STATION_CSV_HEADER)
        for s in stations:
            writer.writerow((s.id, repr(s.lat), repr(s.lon)))


def synth_stations(count: int, clusters, seed) -> list[Station]:
    """Draw ``count`` stations from a Gaussian mixture, deterministically.

    Each cluster is (center_lat, center_lon, stddev_km, weight); the
    per-axis spread converts stddev_km to degrees at the cluster
    center's latitude.
    """
    if count < 2:
        raise ValueError(f"count must be at least 2, got {count}")
    clusters = [Cluster(*c) for c in clusters]
    if not clusters:
        raise ValueError("at least one cluster is required")
    weights = np.array([c.weight for c in clusters], dtype=float)
    if np.any(weights <= 0):
        raise ValueError("cluster weights must be positive")
    if any(c.stddev_km < 0 for c in clusters):
        raise ValueError("cluster stddev_km must be >= 0")

    rng = np.random.default_rng(seed)
    choice = rng.choice(len(clusters), size=count, p=weights / weights.sum())
    center_lat = np.array([c.center_lat for c in clusters])[choice]
    center_lon = np.array([c.center_lon for c in clusters])[choice]
    sd_km = np.array([c.stddev_km for c in clusters])[choice]
    sd_lat = sd_km / KM_PER_DEG_LAT
    # longitude degrees shrink with latitude
    sd_lon = sd_km / (KM_PER_DEG_LAT * np.maximum(np.cos(np.radians(center_lat)), 1e-9))
    lat = np.clip(rng.normal(center_lat, sd_lat), -90.0, 90.0)
    lon = np.clip(rng.normal(center_lon, sd_lon), -180.0, 180.0)
    width = max(5, len(str(count - 1)))
    return [Station(f"s{i:0{width}d}", float(lat[i]), float(lon[i])) for i in range(count)]


class LatencyMatrix:
    """Normalized symmetric station latencies; diagonal 0, max entry 1."""

    def __init__(self, ids, values: np.ndarray):
        self.ids = tuple(ids)
        self.values = values
        self._index = {sid: i for i, sid in enumerate(self.ids)}
        if len(self._index) != len(self.ids):
            raise ValueError("station ids must be unique")

    @property
    def n(self) -> int:
        return len(self.ids)

    def index(self, station_id: str) -> int:
        try:
            return self._index[station_id]
        except KeyError:
            raise ValueError(f"unknown station id {station_id!r}") from None

    def entry(self, a: str, b: str) -> float:
        return float(self.values[self.index(a), self.index(b)])


def latency_matrix(stations, *, _distances: np.ndarray | None = None) -> LatencyMatrix:
    """Pairwise distances divided by the maximum pairwise distance."""
    if len(stations) < 2:
        raise ValueError(f"need at least 2 stations, got {len(stations)}")
    d = distance_matrix_km(stations) if _distances is None else _distances
    dmax = d.max()
    if dmax <= 0.0:
        raise ValueError("degenerate topology: all stations coincident")
    values = d / dmax
    zero = values == 0.0
    np.fill_diagonal(zero, False)
    values[zero] = DUPLICATE_FLOOR
    return LatencyMatrix((s.id for s in stations), values)


@dataclass(frozen=True)
class RoleAssignment:
    publishers: tuple[str, ...]
    workers: tuple[str, ...]
    masternodes: tuple[str, ...]


def assign_roles(
    stations,
    n_publishers: int = 5,
    n_workers: int = 100,
    n_masternodes: int = 20,
    *,
    seed,
) -> RoleAssignment:
    """Disjoint uniform draws, in order publishers -> workers -> masternodes."""
    ids = np.array([s.id for s in stations])
    need = n_publishers + n_workers + n_masternodes
    if len(ids) < need:
        raise ValueError(f"{need} stations needed for the requested roles, got {len(ids)}")
    rng = np.random.default_rng(seed)
    remaining = ids
    groups = []
    for n in (n_publishers, n_workers, n_masternodes):
        drawn = rng.choice(remaining, size=n, replace=False)
        groups.append(tuple(str(x) for x in drawn))
        remaining = remaining[~np.isin(remaining, drawn)]
    return RoleAssignment(*groups)


def candidate_platforms(stations, m: int = 20, *, _distances: np.ndarray | None = None) -> list[str]:
    """The ``m`` most central stations by total distance to all others.

    Ties break by station id ascending, so rankings are prefixes of
    each other as ``m`` grows.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m > len(stations):
        raise ValueError(f"m = {m} exceeds station count {len(stations)}")
    d = distance_matrix_km(stations) if _distances is None else _distances
    sums = d.sum(axis=1)
    ranked = sorted(range(len(stations)), key=lambda i: (sums[i], stations[i].id))
    return [stations[i].id for i in ranked[:m]]


def pick_platform(candidates, seed) -> str:
    """Uniform choice among candidate sites, deterministic per seed."""
    candidates = list(candidates)
    if not candidates:
        raise ValueError("candidate list must be nonempty")
    rng = np.random.default_rng(seed)
    return candidates[int(rng.integers(len(candidates)))]


def best_relay(matrix: LatencyMatrix, worker_id: str, publisher_id: str, masternodes) -> str:
    """Masternode minimizing d(worker, mn) + d(mn, publisher).

    Ties break by station id ascending.
    """
    mns = sorted(masternodes)
    if not mns:
        raise ValueError("masternode list must be nonempty")
    best_id = mns[0]
    best_sum = math.inf
    for mn in mns:
        s = matrix.entry(worker_id, mn) + matrix.entry(mn, publisher_id)
        if s < best_sum:
            best_id, best_sum = mn, s
    return best_id
