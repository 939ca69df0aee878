// Bundled copy of the engine's versioned emotion word table.
// Regenerate with tools/gen_sector_table.py; the digest is compared against
// the engine's copy at handshake so the two cannot silently drift apart.

export interface SectorWord {
  word: string;
  degrees: number;
}

export const SECTOR_TABLE_VERSION = "1.0";
export const SECTOR_TABLE_DIGEST = "605de46ad9163767395b179de1d722c72a5cb3cc3ea86c3e4d25d42f6ecb6852";

export const SECTOR_WORDS: SectorWord[] = [
  { word: "happy", degrees: 7.8 },
  { word: "delighted", degrees: 24.9 },
  { word: "excited", degrees: 48.6 },
  { word: "astonished", degrees: 69.8 },
  { word: "aroused", degrees: 73.8 },
  { word: "tense", degrees: 92.8 },
  { word: "alarmed", degrees: 96.5 },
  { word: "angry", degrees: 99.0 },
  { word: "afraid", degrees: 116.0 },
  { word: "annoyed", degrees: 123.0 },
  { word: "distressed", degrees: 138.0 },
  { word: "frustrated", degrees: 141.0 },
  { word: "miserable", degrees: 188.7 },
  { word: "sad", degrees: 207.5 },
  { word: "gloomy", degrees: 209.0 },
  { word: "depressed", degrees: 211.0 },
  { word: "bored", degrees: 242.0 },
  { word: "droopy", degrees: 256.7 },
  { word: "tired", degrees: 267.7 },
  { word: "sleepy", degrees: 271.9 },
  { word: "calm", degrees: 316.2 },
  { word: "relaxed", degrees: 318.0 },
  { word: "satisfied", degrees: 319.0 },
  { word: "at_ease", degrees: 321.0 },
  { word: "content", degrees: 323.0 },
  { word: "serene", degrees: 328.6 },
  { word: "glad", degrees: 349.0 },
  { word: "pleased", degrees: 353.2 },
];
