/** Client-side parsing of judgment input: decimals or simple fractions "a/b". */

export type ParsedRatio =
  | { ok: true; value: number }
  | { ok: false; reason: string };

const DECIMAL = /^\s*\+?(\d+(?:\.\d*)?|\.\d+)(?:[eE][-+]?\d+)?\s*$/;
const FRACTION = /^\s*\+?(\d+(?:\.\d*)?|\.\d+)\s*\/\s*(\d+(?:\.\d*)?|\.\d+)\s*$/;

export function parseRatioInput(raw: string): ParsedRatio {
  const fraction = FRACTION.exec(raw);
  if (fraction) {
    const numerator = Number(fraction[1]);
    const denominator = Number(fraction[2]);
    if (denominator === 0) {
      return { ok: false, reason: 'division by zero' };
    }
    const value = numerator / denominator;
    if (!(value > 0) || !Number.isFinite(value)) {
      return { ok: false, reason: 'ratio must be a positive number' };
    }
    return { ok: true, value };
  }
  if (DECIMAL.test(raw)) {
    const value = Number(raw);
    if (!(value > 0) || !Number.isFinite(value)) {
      return { ok: false, reason: 'ratio must be a positive number' };
    }
    return { ok: true, value };
  }
  return { ok: false, reason: 'ratio must be a positive number or a fraction like 3/2' };
}
