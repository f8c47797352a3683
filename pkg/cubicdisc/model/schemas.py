from __future__ import annotations
from typing import List, Optional

from pydantic import BaseModel, Field


# -------- Check --------
class ConditionReportRecord(BaseModel):
    d: int
    star: bool
    star_star: bool
    star_star_star: bool
    cert_a2: Optional[List[int]] = None
    cert_divisor_n: Optional[int] = None
    cert_pell_n: Optional[int] = None
    cert_pell_a: Optional[int] = None


# -------- Pell --------
class PellRecord(BaseModel):
    D: int
    N: int
    x: Optional[int] = None
    y: Optional[int] = None
    oracle_y_max: Optional[int] = None
    oracle_agrees: Optional[bool] = None


# -------- Witness --------
class WitnessRecord(BaseModel):
    d: int
    n: int
    a: int
    m: int
    case: int = Field(..., ge=1, le=3)
    w: List[int]
    k: int
    c: int
    chi_l1_w: int
    chi_w_w: int


# -------- Canon --------
class CanonicalRecord(BaseModel):
    k: int
    c: int
    discriminant: int
    transform: List[List[int]]
    gram: List[List[int]]


# -------- Table --------
class TableRowRecord(BaseModel):
    d: int
    star_star: bool
    star_star_star: bool
