"""Domain types and dataset IO.

Images travel through the pipeline as float64 (H, W, 3) arrays with values in
[0, 1]; 8-bit quantization happens only at the PNG boundary. Datasets live on
disk as a directory of PNGs plus one ``annotations.json``:

    {
      "classes": ["circle", ...],
      "images": [{"id": "s0", "file": "s0.png", "width": W, "height": H}],
      "annotations": [{"image_id": "s0", "bbox": [x, y, w, h], "class_id": 0}]
    }
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import (
    BoxOutOfBoundsError,
    MalformedJsonError,
    MissingFileError,
    UnknownClassIdError,
)


@dataclass(frozen=True)
class BBox:
    """Axis-aligned box, top-left corner plus size, in pixels."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"box sides must be positive, got w={self.w} h={self.h}")

    @property
    def x2(self) -> int:
        return self.x + self.w

    @property
    def y2(self) -> int:
        return self.y + self.h

    @property
    def area(self) -> int:
        return self.w * self.h

    def inside(self, width: int, height: int) -> bool:
        return 0 <= self.x and self.x2 <= width and 0 <= self.y and self.y2 <= height

    def as_list(self) -> list[int]:
        return [self.x, self.y, self.w, self.h]


@dataclass(frozen=True)
class Annotation:
    bbox: BBox
    class_id: int


@dataclass(frozen=True)
class SampleRecord:
    image: np.ndarray  # (H, W, 3) float64 in [0, 1]
    annotations: tuple[Annotation, ...]
    id: str

    @property
    def height(self) -> int:
        return self.image.shape[0]

    @property
    def width(self) -> int:
        return self.image.shape[1]


@dataclass
class Dataset:
    classes: tuple[str, ...]
    samples: list[SampleRecord] = field(default_factory=list)


def ensure_image(arr: np.ndarray) -> np.ndarray:
    """Validate and return an (H, W, 3) float image in [0, 1]."""
    arr = np.asarray(arr, dtype=np.float64)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) image, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError("image has zero area")
    if not np.isfinite(arr).all():
        raise ValueError("image contains non-finite values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ValueError("image values outside [0, 1]")
    return arr


def save_image(image: np.ndarray, path: str | Path) -> None:
    """Write an image as 8-bit RGB PNG; each channel quantized as round(v*255)."""
    image = ensure_image(image)
    data = np.round(image * 255.0).astype(np.uint8)
    try:
        Image.fromarray(data, mode="RGB").save(Path(path), format="PNG")
    except OSError as exc:
        raise IOError(f"cannot write image to {path}: {exc}") from exc


def load_image(path: str | Path) -> np.ndarray:
    path = Path(path)
    if not path.is_file():
        raise MissingFileError(f"image file not found: {path}")
    with Image.open(path) as img:
        data = np.asarray(img.convert("RGB"), dtype=np.float64)
    return data / 255.0


def load_dataset(root_path: str | Path) -> Dataset:
    """Load and fully validate a dataset directory."""
    root = Path(root_path)
    ann_path = root / "annotations.json"
    if not ann_path.is_file():
        raise MissingFileError(f"annotations.json not found under {root}")
    try:
        header = json.loads(ann_path.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedJsonError(f"{ann_path}: {exc}") from exc

    for key in ("classes", "images", "annotations"):
        if key not in header:
            raise MalformedJsonError(f"{ann_path}: missing key {key!r}")
    classes = tuple(header["classes"])
    if len(set(classes)) != len(classes):
        raise MalformedJsonError("class names must be unique")

    anns_by_image: dict[str, list[Annotation]] = {}
    for entry in header["annotations"]:
        try:
            x, y, w, h = entry["bbox"]
            ann = Annotation(bbox=BBox(int(x), int(y), int(w), int(h)), class_id=int(entry["class_id"]))
            image_id = str(entry["image_id"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedJsonError(f"bad annotation entry {entry!r}: {exc}") from exc
        if ann.class_id < 0 or ann.class_id >= len(classes):
            raise UnknownClassIdError(f"class_id {ann.class_id} not in [0, {len(classes)}) for image {image_id}")
        anns_by_image.setdefault(image_id, []).append(ann)

    samples = []
    seen_ids = set()
    for entry in header["images"]:
        try:
            sample_id = str(entry["id"])
            file_name = str(entry["file"])
            width, height = int(entry["width"]), int(entry["height"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedJsonError(f"bad image entry {entry!r}: {exc}") from exc
        if sample_id in seen_ids:
            raise MalformedJsonError(f"duplicate sample id {sample_id!r}")
        seen_ids.add(sample_id)
        image = load_image(root / file_name)
        if image.shape[:2] != (height, width):
            raise MalformedJsonError(
                f"{file_name}: header says {width}x{height}, file is {image.shape[1]}x{image.shape[0]}"
            )
        for ann in anns_by_image.get(sample_id, []):
            if not ann.bbox.inside(width, height):
                raise BoxOutOfBoundsError(
                    f"box {ann.bbox.as_list()} outside {width}x{height} image {sample_id!r}",
                    sample_id=sample_id,
                )
        samples.append(
            SampleRecord(image=image, annotations=tuple(anns_by_image.get(sample_id, [])), id=sample_id)
        )

    unknown = set(anns_by_image) - seen_ids
    if unknown:
        raise MalformedJsonError(f"annotations reference unknown image ids: {sorted(unknown)}")
    return Dataset(classes=classes, samples=samples)


def save_dataset(dataset: Dataset, root_path: str | Path) -> None:
    """Write a dataset directory (PNGs + annotations.json)."""
    root = Path(root_path)
    root.mkdir(parents=True, exist_ok=True)
    images = []
    annotations = []
    for sample in dataset.samples:
        file_name = f"{sample.id}.png"
        save_image(sample.image, root / file_name)
        images.append(
            {"id": sample.id, "file": file_name, "width": sample.width, "height": sample.height}
        )
        for ann in sample.annotations:
            annotations.append(
                {"image_id": sample.id, "bbox": ann.bbox.as_list(), "class_id": ann.class_id}
            )
    payload = {"classes": list(dataset.classes), "images": images, "annotations": annotations}
    (root / "annotations.json").write_text(json.dumps(payload, indent=1))


def validate_dataset(dataset: Dataset) -> list[str]:
    """Return invariant violations as strings; empty list means valid."""
    violations = []
    if len(set(dataset.classes)) != len(dataset.classes):
        violations.append("duplicate class names")
    seen = set()
    for sample in dataset.samples:
        if sample.id in seen:
            violations.append(f"duplicate sample id {sample.id!r}")
        seen.add(sample.id)
        arr = sample.image
        if arr.ndim != 3 or arr.shape[2] != 3:
            violations.append(f"{sample.id}: image shape {arr.shape} is not (H, W, 3)")
            continue
        if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
            violations.append(f"{sample.id}: pixel values outside [0, 1]")
        for ann in sample.annotations:
            if ann.bbox.w <= 0 or ann.bbox.h <= 0:
                violations.append(f"{sample.id}: degenerate box {ann.bbox.as_list()}")
            elif not ann.bbox.inside(sample.width, sample.height):
                violations.append(f"{sample.id}: box {ann.bbox.as_list()} out of bounds")
            if not (0 <= ann.class_id < len(dataset.classes)):
                violations.append(f"{sample.id}: unknown class id {ann.class_id}")
    return violations
