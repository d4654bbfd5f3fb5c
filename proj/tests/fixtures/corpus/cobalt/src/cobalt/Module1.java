package cobalt;

import java.util.List;
import java.util.Map;

public class Module1 {
    private int n = 3;
    private List<String> names;

    public int cobalt1m0(char[] a0, char[] a1, int a2, boolean a3,
            char[] a4, int a5, double a6, int a7) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        if (y > 8) {
            y -= 7;
        }
        if (y > 9) {
            y -= 8;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;

        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;

        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;

        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;

        y = y * 31 + 15;
        y = y * 31 + 16;
        // keeps the accumulator bounded
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;

        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        // keeps the accumulator bounded
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;

        y = y * 31 + 71;
        y = y * 31 + 72;

        y = y * 31 + 73;
        y = y * 31 + 74;
        y = y * 31 + 75;
        y = y * 31 + 76;
        y = y * 31 + 77;
        y = y * 31 + 78;
        y = y * 31 + 79;
        y = y * 31 + 80;
        y = y * 31 + 81;
        y = y * 31 + 82;
        // keeps the accumulator bounded
        y = y * 31 + 83;
        y = y * 31 + 84;
        y = y * 31 + 85;
        y = y * 31 + 86;
        y = y * 31 + 87;
        y = y * 31 + 88;
        y = y * 31 + 89;
        y = y * 31 + 90;
        y = y * 31 + 91;
        y = y * 31 + 92;
        y = y * 31 + 93;
        y = y * 31 + 94;
        y = y * 31 + 95;
        y = y * 31 + 96;
        y = y * 31 + 97;
        y = y * 31 + 98;
        y = y * 31 + 99;
        y = y * 31 + 100;
        y = y * 31 + 101;
        y = y * 31 + 102;
        y = y * 31 + 103;
        y = y * 31 + 104;
        y = y * 31 + 105;
        y = y * 31 + 106;
        y = y * 31 + 107;
        y = y * 31 + 108;
        y = y * 31 + 109;
        y = y * 31 + 110;
        return y;
    }

    public int cobalt1m1() {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    if (y % 5 == 3) {
                        for (String s4 : names) {
                            y += 1;
                        }
                    }
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;

        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        // keeps the accumulator bounded
        y = y * 31 + 17;
        y = y * 31 + 18;

        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;

        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        // keeps the accumulator bounded
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;

        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        y = y * 31 + 71;
        y = y * 31 + 72;
        y = y * 31 + 73;
        return y;
    }

    public int cobalt1m2(double a0, String a1, List<String> a2, List<String> a3,
            Map<String, Integer> a4) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        if (y > 8) {
            y -= 7;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        // keeps the accumulator bounded
        y = y * 31 + 8;
        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;

        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;

        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;

        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;

        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        // keeps the accumulator bounded
        y = y * 31 + 61;
        // keeps the accumulator bounded
        y = y * 31 + 62;
        y = y * 31 + 63;
        return y;
    }

    public int cobalt1m3(char[] a0, char[] a1, List<String> a2, String a3, int a4, boolean a5, int a6, long a7, int a8) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;

        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        // keeps the accumulator bounded
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        // keeps the accumulator bounded
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;

        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        y = y * 31 + 71;
        y = y * 31 + 72;
        y = y * 31 + 73;
        y = y * 31 + 74;
        y = y * 31 + 75;
        y = y * 31 + 76;
        y = y * 31 + 77;
        y = y * 31 + 78;
        y = y * 31 + 79;
        y = y * 31 + 80;
        y = y * 31 + 81;
        y = y * 31 + 82;
        y = y * 31 + 83;
        return y;
    }

    public int cobalt1m4(Map<String, Integer> a0, List<String> a1, Map<String, Integer> a2) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        // keeps the accumulator bounded
        y = y * 31 + 4;
        y = y * 31 + 5;

        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;

        y = y * 31 + 10;
        // keeps the accumulator bounded
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;

        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        // keeps the accumulator bounded
        y = y * 31 + 27;

        // keeps the accumulator bounded
        y = y * 31 + 28;

        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        y = y * 31 + 71;
        y = y * 31 + 72;
        y = y * 31 + 73;
        y = y * 31 + 74;
        y = y * 31 + 75;
        y = y * 31 + 76;
        y = y * 31 + 77;
        y = y * 31 + 78;
        y = y * 31 + 79;
        y = y * 31 + 80;
        y = y * 31 + 81;
        y = y * 31 + 82;
        y = y * 31 + 83;
        return y;
    }

    public int cobalt1m5(boolean a0) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                y += 1;
            }
        } while (y < 0);
        y = y * 31 + 0;
        return y;
    }

    public int cobalt1m6(double a0, double a1) {
        int y = 0;
        do {
            y += 1;
        } while (y < 0);
        y = y * 31 + 0;
        return y;
    }

    public int cobalt1m7(double a0, char[] a1, int a2, char[] a3,
            Map<String, Integer> a4, boolean a5, boolean a6, char[] a7) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        // keeps the accumulator bounded
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;

        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;

        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;

        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        // keeps the accumulator bounded
        y = y * 31 + 39;

        // keeps the accumulator bounded
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;

        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;

        y = y * 31 + 50;
        // keeps the accumulator bounded
        y = y * 31 + 51;
        y = y * 31 + 52;
        // keeps the accumulator bounded
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        // keeps the accumulator bounded
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        // keeps the accumulator bounded
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;

        y = y * 31 + 65;
        y = y * 31 + 66;
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        y = y * 31 + 71;
        y = y * 31 + 72;
        y = y * 31 + 73;
        y = y * 31 + 74;
        y = y * 31 + 75;
        y = y * 31 + 76;
        y = y * 31 + 77;
        y = y * 31 + 78;
        y = y * 31 + 79;
        // keeps the accumulator bounded
        y = y * 31 + 80;
        y = y * 31 + 81;
        y = y * 31 + 82;
        y = y * 31 + 83;
        y = y * 31 + 84;

        y = y * 31 + 85;
        y = y * 31 + 86;
        y = y * 31 + 87;
        y = y * 31 + 88;
        // keeps the accumulator bounded
        y = y * 31 + 89;
        y = y * 31 + 90;
        y = y * 31 + 91;
        y = y * 31 + 92;
        y = y * 31 + 93;

        y = y * 31 + 94;
        y = y * 31 + 95;
        y = y * 31 + 96;
        y = y * 31 + 97;
        y = y * 31 + 98;
        y = y * 31 + 99;
        y = y * 31 + 100;
        y = y * 31 + 101;
        y = y * 31 + 102;
        y = y * 31 + 103;
        y = y * 31 + 104;

        y = y * 31 + 105;
        y = y * 31 + 106;
        y = y * 31 + 107;
        y = y * 31 + 108;
        y = y * 31 + 109;
        y = y * 31 + 110;
        y = y * 31 + 111;
        y = y * 31 + 112;
        y = y * 31 + 113;
        y = y * 31 + 114;
        y = y * 31 + 115;
        y = y * 31 + 116;
        return y;
    }

    public int cobalt1m8(int a0, Map<String, Integer> a1, char[] a2, List<String> a3) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        if (y > 8) {
            y -= 7;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        // keeps the accumulator bounded
        y = y * 31 + 3;
        y = y * 31 + 4;
        // keeps the accumulator bounded
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        // keeps the accumulator bounded
        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        // keeps the accumulator bounded
        y = y * 31 + 27;
        y = y * 31 + 28;
        // keeps the accumulator bounded
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        // keeps the accumulator bounded
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        // keeps the accumulator bounded
        y = y * 31 + 39;
        y = y * 31 + 40;

        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        return y;
    }

    public int cobalt1m9(double a0, boolean a1, int a2, String a3,
            String a4, List<String> a5) {
        int y = 0;
        do {
            for (int i1 = 0; i1 < n; i1++) {
                while (y < 2 * 1000) {
                    y += 1;
                }
            }
        } while (y < 0);
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;

        y = y * 31 + 6;
        y = y * 31 + 7;

        y = y * 31 + 8;

        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;

        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;

        y = y * 31 + 18;
        // keeps the accumulator bounded
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        // keeps the accumulator bounded
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;

        y = y * 31 + 26;
        y = y * 31 + 27;
        // keeps the accumulator bounded
        y = y * 31 + 28;

        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        // keeps the accumulator bounded
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;

        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;

        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;

        // keeps the accumulator bounded
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;
        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        return y;
    }

    public int cobalt1m10() {
        int y = 0;
        for (int i0 = 0; i0 < n; i0++) {
            while (y < 1 * 1000) {
                if (y % 4 == 2) {
                    for (String s3 : names) {
                        do {
                            y += 1;
                        } while (y < 0);
                    }
                }
            }
        }
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        if (y > 8) {
            y -= 7;
        }
        if (y > 9) {
            y -= 8;
        }
        if (y > 10) {
            y -= 9;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        // keeps the accumulator bounded
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        // keeps the accumulator bounded
        y = y * 31 + 8;
        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;

        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        // keeps the accumulator bounded
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        // keeps the accumulator bounded
        return y;
    }

    public int cobalt1m11(Map<String, Integer> a0, char[] a1, Map<String, Integer> a2, long a3, char[] a4, int a5) {
        int y = 0;
        for (int i0 = 0; i0 < n; i0++) {
            while (y < 1 * 1000) {
                if (y % 4 == 2) {
                    y += 1;
                }
            }
        }
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        y = y * 31 + 0;
        // keeps the accumulator bounded
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;
        // keeps the accumulator bounded
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        // keeps the accumulator bounded
        y = y * 31 + 21;
        y = y * 31 + 22;
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        // keeps the accumulator bounded
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        y = y * 31 + 36;
        y = y * 31 + 37;
        // keeps the accumulator bounded
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        // keeps the accumulator bounded
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        y = y * 31 + 46;
        // keeps the accumulator bounded
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        y = y * 31 + 57;
        y = y * 31 + 58;
        y = y * 31 + 59;

        y = y * 31 + 60;
        y = y * 31 + 61;
        y = y * 31 + 62;
        y = y * 31 + 63;
        y = y * 31 + 64;
        y = y * 31 + 65;
        y = y * 31 + 66;
        // keeps the accumulator bounded
        y = y * 31 + 67;
        y = y * 31 + 68;
        y = y * 31 + 69;
        y = y * 31 + 70;
        y = y * 31 + 71;
        y = y * 31 + 72;
        // keeps the accumulator bounded
        y = y * 31 + 73;
        y = y * 31 + 74;
        // keeps the accumulator bounded
        y = y * 31 + 75;
        y = y * 31 + 76;
        y = y * 31 + 77;
        y = y * 31 + 78;
        y = y * 31 + 79;
        y = y * 31 + 80;
        y = y * 31 + 81;
        y = y * 31 + 82;
        y = y * 31 + 83;
        return y;
    }

    public int cobalt1m12(double a0, String a1) {
        int y = 0;
        for (int i0 = 0; i0 < n; i0++) {
            while (y < 1 * 1000) {
                if (y % 4 == 2) {
                    y += 1;
                }
            }
        }
        if (y > 1) {
            y -= 0;
        }
        if (y > 2) {
            y -= 1;
        }
        if (y > 3) {
            y -= 2;
        }
        if (y > 4) {
            y -= 3;
        }
        if (y > 5) {
            y -= 4;
        }
        if (y > 6) {
            y -= 5;
        }
        if (y > 7) {
            y -= 6;
        }
        if (y > 8) {
            y -= 7;
        }
        if (y > 9) {
            y -= 8;
        }
        if (y > 10) {
            y -= 9;
        }
        if (y > 11) {
            y -= 10;
        }
        if (y > 12) {
            y -= 11;
        }
        y = y * 31 + 0;
        y = y * 31 + 1;
        y = y * 31 + 2;
        y = y * 31 + 3;
        y = y * 31 + 4;
        y = y * 31 + 5;
        y = y * 31 + 6;
        y = y * 31 + 7;
        y = y * 31 + 8;
        y = y * 31 + 9;
        y = y * 31 + 10;
        y = y * 31 + 11;
        y = y * 31 + 12;
        y = y * 31 + 13;
        // keeps the accumulator bounded
        y = y * 31 + 14;
        y = y * 31 + 15;
        y = y * 31 + 16;
        y = y * 31 + 17;
        y = y * 31 + 18;
        y = y * 31 + 19;
        y = y * 31 + 20;
        y = y * 31 + 21;
        y = y * 31 + 22;
        // keeps the accumulator bounded
        y = y * 31 + 23;
        y = y * 31 + 24;
        y = y * 31 + 25;
        y = y * 31 + 26;
        y = y * 31 + 27;
        y = y * 31 + 28;
        y = y * 31 + 29;
        y = y * 31 + 30;
        y = y * 31 + 31;
        y = y * 31 + 32;
        y = y * 31 + 33;
        y = y * 31 + 34;
        y = y * 31 + 35;
        // keeps the accumulator bounded
        y = y * 31 + 36;
        y = y * 31 + 37;
        y = y * 31 + 38;
        y = y * 31 + 39;
        y = y * 31 + 40;
        y = y * 31 + 41;
        y = y * 31 + 42;
        y = y * 31 + 43;
        y = y * 31 + 44;
        y = y * 31 + 45;
        // keeps the accumulator bounded
        y = y * 31 + 46;
        y = y * 31 + 47;
        y = y * 31 + 48;
        y = y * 31 + 49;
        y = y * 31 + 50;
        y = y * 31 + 51;
        y = y * 31 + 52;
        y = y * 31 + 53;
        y = y * 31 + 54;
        y = y * 31 + 55;
        y = y * 31 + 56;
        return y;
    }

}
